#pragma once

#include <functional>

#include "markovdiff/rng.hpp"
#include "markovdiff/sample_path.hpp"

namespace markovdiff::sde {

/// Drift field with the regularity bounds required for a well-posed
/// drift-diffusion process: Lipschitz constant K and linear growth bound k
/// with |b(x,t)| <= k * sqrt(1 + x^2).
struct DriftSpec {
    std::function<double(double x, double t)> b;
    double lipschitz_bound = 0.0;  // K
    double growth_bound = 0.0;     // k

    bool satisfies_growth(double x, double t, double slack = 1e-9) const;
};

/// Sampled validation of the growth and Lipschitz bounds over a box; throws
/// if either is violated at the probe points.
void validate_drift(const DriftSpec& spec, double x_lo, double x_hi, double t_lo, double t_hi,
                    int n_probe = 256);

struct DiffusionResult {
    PathSet paths;
    std::vector<std::size_t> aborted_paths;  ///< paths dropped for violating the growth bound
};

/// Euler-Maruyama integration of dx = b dt + dw from sampled initial
/// positions. Paths whose trajectory violates the growth bound are aborted
/// and reported (excluded from the returned set). Requires dt * K < 0.1.
DiffusionResult simulate_diffusion(const DriftSpec& drift, double nu,
                                   const std::function<double(SubstreamRng&)>& x0_sampler,
                                   double dt, std::size_t n_steps, std::size_t n_paths,
                                   std::uint64_t seed, int n_threads = 0);

}  // namespace markovdiff::sde
