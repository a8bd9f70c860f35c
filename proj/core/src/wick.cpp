#include "markovdiff/wick.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace markovdiff::sde {

namespace {

double sum_pairings(std::vector<double>& pts, double nu) {
    if (pts.empty()) return 1.0;
    // Pair the first point with each remaining one and recurse on the rest.
    const double t0 = pts.front();
    double total = 0.0;
    for (std::size_t j = 1; j < pts.size(); ++j) {
        const double cov = nu * std::min(t0, pts[j]);
        std::vector<double> rest;
        rest.reserve(pts.size() - 2);
        for (std::size_t k = 1; k < pts.size(); ++k)
            if (k != j) rest.push_back(pts[k]);
        total += cov * sum_pairings(rest, nu);
    }
    return total;
}

}  // namespace

double wick_moment(std::span<const double> time_points, double nu) {
    if (time_points.size() % 2 == 1) return 0.0;
    if (time_points.size() > 20) throw std::invalid_argument("wick_moment: too many points");
    std::vector<double> pts(time_points.begin(), time_points.end());
    for (double t : pts)
        if (t < 0.0) throw std::invalid_argument("wick_moment: negative time");
    return sum_pairings(pts, nu);
}

}  // namespace markovdiff::sde
