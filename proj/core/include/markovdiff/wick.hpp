#pragma once

#include <span>

namespace markovdiff::sde {

/// Closed-form n-point moment of the zero-drift process: the sum over pair
/// partitions of products of pair covariances nu * min(t_i, t_j).
/// Returns 0 for odd n and 1 for n == 0.
double wick_moment(std::span<const double> time_points, double nu);

}  // namespace markovdiff::sde
