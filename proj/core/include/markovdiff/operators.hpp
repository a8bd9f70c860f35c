#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "markovdiff/field.hpp"

namespace markovdiff::hilbert {

/// Discrete linear operator on the density-weighted function space (1-D).
struct OperatorMatrix {
    Grid grid;
    Eigen::MatrixXd matrix;
    std::string label;

    ScalarField apply(const ScalarField& f) const;
};

/// (f, g) = trapezoid integral of rho * f * g over a shared grid.
double weighted_inner_product(const ScalarField& f, const ScalarField& g, const ScalarField& rho);

OperatorMatrix position_operator(const Grid& grid);
OperatorMatrix multiplication_operator(const ScalarField& field, std::string label = "mult");
OperatorMatrix derivative_operator(const Grid& grid, int order);

/// Velocity operator b(x) + nu * d/dx. With b = 0 this is the zero-drift case.
OperatorMatrix velocity_operator(const ScalarField& b, double nu);

/// H = 0.5 * velocity^2 + U.
OperatorMatrix hamiltonian_operator(const ScalarField& b, double nu, const ScalarField& U);

/// Max over test functions of the interior sup-norm of (AB - BA) g minus
/// expected_multiplier * g. Boundary rows use one-sided stencils, so
/// `boundary_skip` layers per side are excluded from the norm.
double commutator_residual(const OperatorMatrix& A, const OperatorMatrix& B,
                           std::span<const ScalarField> test_fns,
                           const ScalarField& expected_multiplier, int boundary_skip = 4);

/// Residual of [v_i, v_j] g against nu * (d_i b_j - d_j b_i) g on a multi-D
/// grid, applied through stencils (no matrix form needed).
double velocity_commutator_residual(const std::vector<ScalarField>& b, double nu, int axis_i,
                                    int axis_j, std::span<const ScalarField> test_fns,
                                    int boundary_skip = 4);

/// Pointwise acceleration field of the drift: per component
/// db_i/dt + (nu/2) lap b_i + 0.5 d_i(|b|^2). The drift must be curl-free for
/// dim > 1 (validated); rotational drifts are out of scope.
std::vector<ScalarField> acceleration_field(const std::vector<ScalarField>& b, double nu,
                                            const std::vector<ScalarField>* db_dt = nullptr,
                                            double curl_tol = 1e-8);

/// 1-D potential with -dU/dx equal to the given acceleration, U(x_min) = 0,
/// by cumulative trapezoid quadrature.
ScalarField stochastic_potential(const ScalarField& acceleration);

/// Both sides of the asymmetry identity (f, Hg) = (H(f rho), g/rho).
std::pair<double, double> h_asymmetry_check(const ScalarField& U, const ScalarField& b, double nu,
                                            const ScalarField& rho, const ScalarField& f,
                                            const ScalarField& g);

}  // namespace markovdiff::hilbert
