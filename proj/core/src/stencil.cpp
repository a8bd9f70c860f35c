#include "markovdiff/stencil.hpp"

#include <array>
#include <stdexcept>

namespace markovdiff::stencil {

namespace {

// 4th-order first-derivative rows, coefficients over 12h.
constexpr std::array<double, 5> kD1Interior{1, -8, 0, 8, -1};   // offsets -2..2
constexpr std::array<double, 5> kD1Row0{-25, 48, -36, 16, -3};  // offsets 0..4
constexpr std::array<double, 5> kD1Row1{-3, -10, 18, -6, 1};    // offsets -1..3
constexpr std::array<double, 5> kD1RowN2{-1, 6, -18, 10, 3};    // offsets -3..1
constexpr std::array<double, 5> kD1RowN1{3, -16, 36, -48, 25};  // offsets -4..0

// 4th-order second-derivative rows, coefficients over 12h^2.
constexpr std::array<double, 5> kD2Interior{-1, 16, -30, 16, -1};       // offsets -2..2
constexpr std::array<double, 6> kD2Row0{45, -154, 214, -156, 61, -10};  // offsets 0..5
constexpr std::array<double, 6> kD2Row1{10, -15, -4, 14, -6, 1};        // offsets -1..4
constexpr std::array<double, 6> kD2RowN2{1, -6, 14, -4, -15, 10};       // offsets -4..1
constexpr std::array<double, 6> kD2RowN1{-10, 61, -156, 214, -154, 45};  // offsets -5..0

template <std::size_t N>
double row_apply(const double* line, std::ptrdiff_t stride, int base,
                 const std::array<double, N>& coeffs, int first_offset) {
    double s = 0.0;
    for (std::size_t j = 0; j < N; ++j)
        s += coeffs[j] * line[(base + first_offset + static_cast<int>(j)) * stride];
    return s;
}

void differentiate_line(const double* in, double* out, std::ptrdiff_t stride, int n, double h,
                        int order) {
    if (order == 1) {
        const double scale = 1.0 / (12.0 * h);
        out[0] = scale * row_apply(in, stride, 0, kD1Row0, 0);
        out[stride] = scale * row_apply(in, stride, 1, kD1Row1, -1);
        for (int i = 2; i < n - 2; ++i)
            out[i * stride] = scale * row_apply(in, stride, i, kD1Interior, -2);
        out[(n - 2) * stride] = scale * row_apply(in, stride, n - 2, kD1RowN2, -3);
        out[(n - 1) * stride] = scale * row_apply(in, stride, n - 1, kD1RowN1, -4);
    } else {
        const double scale = 1.0 / (12.0 * h * h);
        out[0] = scale * row_apply(in, stride, 0, kD2Row0, 0);
        out[stride] = scale * row_apply(in, stride, 1, kD2Row1, -1);
        for (int i = 2; i < n - 2; ++i)
            out[i * stride] = scale * row_apply(in, stride, i, kD2Interior, -2);
        out[(n - 2) * stride] = scale * row_apply(in, stride, n - 2, kD2RowN2, -4);
        out[(n - 1) * stride] = scale * row_apply(in, stride, n - 1, kD2RowN1, -5);
    }
}

}  // namespace

Eigen::MatrixXd derivative_matrix(const Grid& grid, int order) {
    if (grid.dim() != 1) throw std::invalid_argument("stencil: matrix form is 1-D");
    if (order != 1 && order != 2) throw std::invalid_argument("stencil: order must be 1 or 2");
    const int n = grid.n(0);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    std::vector<double> e(n, 0.0), col(n, 0.0);
    for (int j = 0; j < n; ++j) {
        e.assign(n, 0.0);
        e[j] = 1.0;
        differentiate_line(e.data(), col.data(), 1, n, grid.h(0), order);
        for (int i = 0; i < n; ++i) m(i, j) = col[i];
    }
    return m;
}

ScalarField derivative(const ScalarField& f, int axis, int order) {
    const Grid& g = f.grid();
    if (axis < 0 || axis >= g.dim()) throw std::invalid_argument("stencil: bad axis");
    if (order != 1 && order != 2) throw std::invalid_argument("stencil: order must be 1 or 2");
    ScalarField out(g);
    const auto stride = static_cast<std::ptrdiff_t>(g.stride(axis));
    const int n = g.n(axis);
    const double h = g.h(axis);
    for (std::size_t base = 0; base < g.size(); ++base) {
        const auto idx = g.unravel(base);
        if (idx[axis] != 0) continue;
        differentiate_line(f.values().data() + base, out.mutable_values().data() + base, stride,
                           n, h, order);
    }
    return out;
}

ScalarField laplacian(const ScalarField& f) {
    ScalarField out = derivative(f, 0, 2);
    for (int a = 1; a < f.grid().dim(); ++a) {
        ScalarField d = derivative(f, a, 2);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += d[i];
    }
    return out;
}

ScalarField gradient_square(const ScalarField& f) {
    ScalarField out(f.grid());
    for (int a = 0; a < f.grid().dim(); ++a) {
        ScalarField d = derivative(f, a, 1);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += d[i] * d[i];
    }
    return out;
}

}  // namespace markovdiff::stencil
