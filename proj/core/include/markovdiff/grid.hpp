#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace markovdiff {

struct AxisSpec {
    double min = 0.0;
    double max = 1.0;
    int n = 0;
};

/// Uniform tensor-product grid, 1 to 3 axes, at least 8 points per axis.
/// Linear storage is row-major with the last axis fastest.
class Grid {
public:
    Grid() = default;
    explicit Grid(std::vector<AxisSpec> axes);

    /// Convenience 1-D constructor.
    static Grid line(double min, double max, int n) { return Grid({AxisSpec{min, max, n}}); }

    int dim() const { return static_cast<int>(axes_.size()); }
    int n(int axis) const { return axes_[axis].n; }
    double min(int axis) const { return axes_[axis].min; }
    double max(int axis) const { return axes_[axis].max; }
    double h(int axis) const { return spacing_[axis]; }
    std::size_t size() const { return size_; }

    double coord(int axis, int i) const { return axes_[axis].min + spacing_[axis] * i; }

    std::size_t index(const std::array<int, 3>& idx) const {
        std::size_t lin = 0;
        for (int a = 0; a < dim(); ++a) lin = lin * axes_[a].n + idx[a];
        return lin;
    }
    std::array<int, 3> unravel(std::size_t lin) const {
        std::array<int, 3> idx{0, 0, 0};
        for (int a = dim() - 1; a >= 0; --a) {
            idx[a] = static_cast<int>(lin % axes_[a].n);
            lin /= axes_[a].n;
        }
        return idx;
    }
    /// Physical coordinates of a linear index.
    std::array<double, 3> point(std::size_t lin) const {
        auto idx = unravel(lin);
        std::array<double, 3> x{0, 0, 0};
        for (int a = 0; a < dim(); ++a) x[a] = coord(a, idx[a]);
        return x;
    }

    /// Trapezoid quadrature weight of a linear index (product over axes).
    double trapezoid_weight(std::size_t lin) const {
        auto idx = unravel(lin);
        double w = 1.0;
        for (int a = 0; a < dim(); ++a)
            w *= (idx[a] == 0 || idx[a] == axes_[a].n - 1) ? 0.5 * spacing_[a] : spacing_[a];
        return w;
    }

    /// Stride of one step along `axis` in linear storage.
    std::size_t stride(int axis) const { return strides_[axis]; }

    bool same_as(const Grid& other, double tol = 1e-12) const;

private:
    std::vector<AxisSpec> axes_;
    std::array<double, 3> spacing_{0, 0, 0};
    std::array<std::size_t, 3> strides_{0, 0, 0};
    std::size_t size_ = 0;
};

}  // namespace markovdiff
