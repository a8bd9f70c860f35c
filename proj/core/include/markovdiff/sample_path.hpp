#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

namespace markovdiff {

/// Ensemble of realized trajectories on a shared uniform time lattice.
/// Structure-of-arrays storage; individual paths are exposed as views.
/// Path i always consumes RNG substream i of the master seed.
class PathSet {
public:
    PathSet(std::vector<double> times, int dim, std::size_t n_paths, std::uint64_t seed);

    std::span<const double> times() const { return times_; }
    std::size_t n_times() const { return times_.size(); }
    std::size_t n_paths() const { return n_paths_; }
    int dim() const { return dim_; }
    double dt() const { return dt_; }
    std::uint64_t seed() const { return seed_; }

    double position(std::size_t path, std::size_t ti, int axis = 0) const {
        return values_[(path * times_.size() + ti) * dim_ + axis];
    }
    double& position(std::size_t path, std::size_t ti, int axis = 0) {
        return values_[(path * times_.size() + ti) * dim_ + axis];
    }

    /// One realized trajectory.
    struct PathView {
        std::span<const double> times;
        std::span<const double> positions;  // n_times * dim, axis fastest
        int dim;
        std::uint64_t substream;
        double at(std::size_t ti, int axis = 0) const { return positions[ti * dim + axis]; }
    };
    PathView path(std::size_t i) const {
        return PathView{times_,
                        std::span<const double>(values_).subspan(i * times_.size() * dim_,
                                                                 times_.size() * dim_),
                        dim_, i};
    }

    /// Drop all but the listed paths (order preserved).
    void keep_paths(const std::vector<std::size_t>& keep);

    /// Nearest lattice index of time t; throws if t is off-lattice beyond tol.
    std::size_t time_index(double t, double tol = 1e-9) const;

private:
    std::vector<double> times_;
    int dim_ = 1;
    std::size_t n_paths_ = 0;
    std::uint64_t seed_ = 0;
    double dt_ = 0.0;
    std::vector<double> values_;
};

/// CSV columns: t, x1[, x2, x3], path_id. At most max_paths paths are written.
void write_paths_csv(std::ostream& os, const PathSet& paths, std::size_t max_paths);

}  // namespace markovdiff
