#pragma once

#include <functional>
#include <span>
#include <vector>

#include "markovdiff/grid.hpp"

namespace markovdiff {

/// Clamp applied to densities before taking logarithms; node-crossing states
/// (interior zeros of rho) are unsupported.
inline constexpr double kRhoFloor = 1e-300;

/// Grid-sampled real field.
class ScalarField {
public:
    ScalarField() = default;
    explicit ScalarField(Grid grid) : grid_(std::move(grid)), values_(grid_.size(), 0.0) {}
    ScalarField(Grid grid, std::vector<double> values);
    /// Samples fn(x) over a 1-D grid.
    ScalarField(Grid grid, const std::function<double(double)>& fn);
    /// Samples fn(point, dim) over any grid.
    ScalarField(Grid grid, const std::function<double(const std::array<double, 3>&, int)>& fn);

    const Grid& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    double& operator[](std::size_t i) { return values_[i]; }
    std::span<const double> values() const { return values_; }
    std::vector<double>& mutable_values() { return values_; }

    bool all_finite() const;

private:
    Grid grid_;
    std::vector<double> values_;
};

/// Trapezoid integral over the grid.
double integral(const ScalarField& f);
double inf_norm(const ScalarField& f);
/// Max |f| over interior points, excluding `skip` layers per side on every axis.
double interior_inf_norm(const ScalarField& f, int skip);

/// Trapezoid integral of f * x_axis^power.
double axis_moment(const ScalarField& f, int axis, int power);
/// Mean and variance of the density along one axis (density need not be normalized).
std::pair<double, double> density_mean_variance(const ScalarField& rho, int axis = 0);

/// Rescales a nonnegative density to unit trapezoid integral.
/// Throws on negative entries, non-finite entries, or vanishing integral.
ScalarField normalize_rho(const ScalarField& rho);

/// Shifts S so that its rho-weighted mean vanishes. Idempotent.
ScalarField gauge_fix(const ScalarField& S, const ScalarField& rho);

/// 1-D Gaussian density field.
ScalarField gaussian_field(const Grid& grid, double mean, double variance);

/// L1 distance between two fields on a common grid.
double l1_distance(const ScalarField& a, const ScalarField& b);

}  // namespace markovdiff
