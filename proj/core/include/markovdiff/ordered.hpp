#pragma once

#include <span>
#include <utility>
#include <vector>

#include "markovdiff/field.hpp"

namespace markovdiff::hilbert {

/// Operator slots of an ordered monomial; leftmost factor = earliest time.
enum class Slot { X, XDot, XDdot };

struct OrderedFactor {
    Slot kind;
    double offset;  ///< evaluation time minus the reference time of rho_t
};

/// Quadrature value of a time-ordered operator product applied to the
/// constant function and paired with it under the density rho_t of the
/// zero-drift process. Position factors act as x + offset * nu * d/dx, the
/// windowed velocity as nu * d/dx, the windowed acceleration as 0.
/// Offsets must ascend; at most 4 factors.
double time_ordered_correlation(std::span<const OrderedFactor> factors, const ScalarField& rho_t,
                                double nu);

/// Position-only convenience overload (offsets s_i = t_i - t).
double time_ordered_correlation(std::span<const double> offsets, const ScalarField& rho_t,
                                double nu);

/// Equal-time ordered polynomial expectation for a drift with fields (R, S):
/// quadrature of exp(R - S) f(x, nu d/dx, accel) exp(R + S), where the
/// acceleration slot multiplies by the pointwise acceleration of
/// b = nu d(R + S)/dx (time derivative of b taken as db_dt, zero by default).
/// Degree at most 4.
double ordered_polynomial_expectation(std::span<const Slot> f_spec, const ScalarField& R,
                                      const ScalarField& S, double nu,
                                      const ScalarField* db_dt = nullptr);

/// Gaussian-kernel smoothing: out(x) = integral G_var(x - y) f(y) dy.
ScalarField heat_smooth(const ScalarField& f, double variance);

/// One-point density reproduction: pairing a grid-indicator delta at
/// y (index) displaced by offset s1 with the constant function under rho_t.
/// Converges to the marginal density at (y, t + s1).
double delta_density(const ScalarField& rho_t, double nu, double s1, std::size_t y_index);

/// Two-point version: time-ordered indicator deltas at (y, t+s1), (z, t+s2);
/// converges to the joint density value.
double delta_density2(const ScalarField& rho_t, double nu, double s1, std::size_t y_index,
                      double s2, std::size_t z_index);

/// Both sides of the delta-completeness identity for ordered monomials f, g:
/// sum_z (1/rho(z)) <f delta_z> <delta_z g> versus <f g>, with deltas
/// realized as grid indicators / h (first-order accurate).
std::pair<double, double> delta_completeness_sides(std::span<const Slot> f_spec,
                                                   std::span<const Slot> g_spec,
                                                   const ScalarField& rho, double nu);

}  // namespace markovdiff::hilbert
