#include "markovdiff/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace markovdiff {

Grid::Grid(std::vector<AxisSpec> axes) : axes_(std::move(axes)) {
    if (axes_.empty() || axes_.size() > 3) throw std::invalid_argument("grid: dim must be 1..3");
    size_ = 1;
    for (std::size_t a = 0; a < axes_.size(); ++a) {
        const auto& ax = axes_[a];
        if (ax.n < 8) throw std::invalid_argument("grid: need at least 8 points per axis");
        if (!(ax.max > ax.min)) throw std::invalid_argument("grid: max must exceed min");
        if (!std::isfinite(ax.min) || !std::isfinite(ax.max))
            throw std::invalid_argument("grid: non-finite extent");
        spacing_[a] = (ax.max - ax.min) / (ax.n - 1);
        size_ *= static_cast<std::size_t>(ax.n);
    }
    std::size_t stride = 1;
    for (int a = static_cast<int>(axes_.size()) - 1; a >= 0; --a) {
        strides_[a] = stride;
        stride *= static_cast<std::size_t>(axes_[a].n);
    }
}

bool Grid::same_as(const Grid& other, double tol) const {
    if (dim() != other.dim()) return false;
    for (int a = 0; a < dim(); ++a) {
        if (n(a) != other.n(a)) return false;
        if (std::abs(min(a) - other.min(a)) > tol) return false;
        if (std::abs(max(a) - other.max(a)) > tol) return false;
    }
    return true;
}

}  // namespace markovdiff
