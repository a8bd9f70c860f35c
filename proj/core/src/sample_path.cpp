#include "markovdiff/sample_path.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace markovdiff {

PathSet::PathSet(std::vector<double> times, int dim, std::size_t n_paths, std::uint64_t seed)
    : times_(std::move(times)), dim_(dim), n_paths_(n_paths), seed_(seed) {
    if (times_.size() < 2) throw std::invalid_argument("paths: need at least two times");
    if (dim_ < 1 || dim_ > 3) throw std::invalid_argument("paths: dim must be 1..3");
    dt_ = times_[1] - times_[0];
    if (!(dt_ > 0.0)) throw std::invalid_argument("paths: times must increase");
    for (std::size_t i = 1; i < times_.size(); ++i) {
        const double step = times_[i] - times_[i - 1];
        if (!(step > 0.0)) throw std::invalid_argument("paths: times must increase");
        if (std::abs(step - dt_) > 1e-9 * std::max(1.0, std::abs(dt_)))
            throw std::invalid_argument("paths: time lattice must be uniform");
    }
    values_.assign(n_paths_ * times_.size() * static_cast<std::size_t>(dim_), 0.0);
}

void PathSet::keep_paths(const std::vector<std::size_t>& keep) {
    const std::size_t block = times_.size() * static_cast<std::size_t>(dim_);
    std::vector<double> packed(keep.size() * block);
    for (std::size_t k = 0; k < keep.size(); ++k) {
        const double* src = values_.data() + keep[k] * block;
        std::copy(src, src + block, packed.data() + k * block);
    }
    values_ = std::move(packed);
    n_paths_ = keep.size();
}

std::size_t PathSet::time_index(double t, double tol) const {
    const double pos = (t - times_.front()) / dt_;
    const double rounded = std::round(pos);
    if (rounded < 0 || rounded >= static_cast<double>(times_.size()) ||
        std::abs(pos - rounded) > tol / dt_) {
        throw std::invalid_argument("paths: requested time is off the lattice");
    }
    return static_cast<std::size_t>(rounded);
}

void write_paths_csv(std::ostream& os, const PathSet& paths, std::size_t max_paths) {
    os << "t";
    for (int a = 0; a < paths.dim(); ++a) os << ",x" << (a + 1);
    os << ",path_id\n";
    char buf[64];
    const std::size_t limit = std::min(max_paths, paths.n_paths());
    for (std::size_t p = 0; p < limit; ++p) {
        for (std::size_t ti = 0; ti < paths.n_times(); ++ti) {
            std::snprintf(buf, sizeof(buf), "%.17g", paths.times()[ti]);
            os << buf;
            for (int a = 0; a < paths.dim(); ++a) {
                std::snprintf(buf, sizeof(buf), "%.17g", paths.position(p, ti, a));
                os << ',' << buf;
            }
            os << ',' << p << '\n';
        }
    }
}

}  // namespace markovdiff
