#pragma once

#include "markovdiff/sample_path.hpp"

namespace markovdiff::sde {

/// Samples zero-drift diffusion paths pinned to w = 0 at time 0, with
/// independent Gaussian increments of variance nu * dt per axis.
/// times must be uniformly spaced and start at >= 0; if times[0] > 0 the
/// first sample carries the accumulated variance nu * times[0].
/// Deterministic for fixed (seed, n_paths) independent of n_threads.
PathSet sample_wiener(double nu, std::vector<double> times, std::size_t n_paths,
                      std::uint64_t seed, int dim = 1, int n_threads = 0);

/// Uniform lattice helper: n_steps + 1 times from t0 with spacing dt.
std::vector<double> uniform_times(double t0, double dt, std::size_t n_steps);

}  // namespace markovdiff::sde
