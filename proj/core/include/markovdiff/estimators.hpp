#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>

#include "markovdiff/sample_path.hpp"

namespace markovdiff::sde {

/// Window for the finite-difference velocity/acceleration observables:
/// inner width epsilon, conditioning offsets delta1/delta2 before and after.
/// The construction enforces epsilon/delta_i <= 0.1 so the windows respect
/// the operator limit ordering.
struct EstimatorWindow {
    double epsilon;
    double delta1;
    double delta2;
    EstimatorWindow(double eps, double d1, double d2);
};

struct McEstimate {
    double value = 0.0;
    double se = 0.0;  ///< standard error of the mean
    std::size_t count = 0;
};

struct EmptyBinError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Conditional mean of forward increments (x(t+h) - x(t))/h over paths with
/// x(t) in a bin around x_bin, Richardson-extrapolated over (h, 2h) to cancel
/// the leading O(h) bias. h must lie in [dt, 10 dt]; the bin is widened until
/// it holds at least min_count paths (error if impossible).
McEstimate estimate_forward_drift(const PathSet& paths, double x_bin, double t, double h,
                                  std::size_t min_count = 100);

/// Same conditioning, estimating (x(t+h) - x(t))^2 / h, Richardson-corrected;
/// recovers the diffusion parameter nu.
McEstimate estimate_quadratic_variation(const PathSet& paths, double x_bin, double t, double h,
                                        std::size_t min_count = 100);

/// Doubly conditioned mean of the windowed velocity at time t given
/// w(t - delta1) ~ x and w(t + delta2) ~ y. For the zero-drift process the
/// conditional mean is exactly (y - x)/(delta1 + delta2) at any window size,
/// so no extrapolation is applied.
McEstimate estimate_conditional_velocity(const PathSet& paths, const EstimatorWindow& window,
                                         double x, double y, double t,
                                         std::size_t min_count = 30);

enum class Observable { Position, Velocity, Acceleration };

struct ObservableAt {
    Observable kind;
    double time;
};

/// Monte Carlo estimate of a time-ordered product of windowed observables at
/// ascending times. Windows must be small against the spacings:
/// epsilon / (t_{i+1} - t_i) <= 0.1.
McEstimate mc_ordered_expectation(const PathSet& paths, std::span<const ObservableAt> sequence,
                                  const EstimatorWindow& window);

/// Sample mean and standard error of f(path) over an ensemble.
template <typename F>
McEstimate mc_mean(const PathSet& paths, F&& f) {
    double sum = 0.0, comp = 0.0;
    double sumsq = 0.0;
    const std::size_t n = paths.n_paths();
    for (std::size_t p = 0; p < n; ++p) {
        const double v = f(paths.path(p));
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        sumsq += v * v;
    }
    McEstimate out;
    out.count = n;
    if (n == 0) return out;
    out.value = sum / static_cast<double>(n);
    const double var = sumsq / static_cast<double>(n) - out.value * out.value;
    out.se = n > 1 ? std::sqrt(std::max(var, 0.0) / static_cast<double>(n - 1)) : 0.0;
    return out;
}

}  // namespace markovdiff::sde
