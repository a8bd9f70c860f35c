#include "markovdiff/field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace markovdiff {

ScalarField::ScalarField(Grid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_.size())
        throw std::invalid_argument("field: value count does not match grid");
}

ScalarField::ScalarField(Grid grid, const std::function<double(double)>& fn)
    : grid_(std::move(grid)), values_(grid_.size()) {
    if (grid_.dim() != 1) throw std::invalid_argument("field: 1-D sampler on multi-D grid");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = fn(grid_.coord(0, static_cast<int>(i)));
}

ScalarField::ScalarField(Grid grid, const std::function<double(const std::array<double, 3>&, int)>& fn)
    : grid_(std::move(grid)), values_(grid_.size()) {
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = fn(grid_.point(i), grid_.dim());
}

bool ScalarField::all_finite() const {
    for (double v : values_)
        if (!std::isfinite(v)) return false;
    return true;
}

double integral(const ScalarField& f) {
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double term = f.grid().trapezoid_weight(i) * f[i];
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double inf_norm(const ScalarField& f) {
    double m = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) m = std::max(m, std::abs(f[i]));
    return m;
}

double interior_inf_norm(const ScalarField& f, int skip) {
    const Grid& g = f.grid();
    double m = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto idx = g.unravel(i);
        bool interior = true;
        for (int a = 0; a < g.dim(); ++a)
            if (idx[a] < skip || idx[a] >= g.n(a) - skip) interior = false;
        if (interior) m = std::max(m, std::abs(f[i]));
    }
    return m;
}

double axis_moment(const ScalarField& f, int axis, int power) {
    const Grid& g = f.grid();
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto idx = g.unravel(i);
        sum += g.trapezoid_weight(i) * f[i] * std::pow(g.coord(axis, idx[axis]), power);
    }
    return sum;
}

std::pair<double, double> density_mean_variance(const ScalarField& rho, int axis) {
    const double mass = integral(rho);
    if (mass <= 0.0) throw std::invalid_argument("density_mean_variance: vanishing mass");
    const double m1 = axis_moment(rho, axis, 1) / mass;
    const double m2 = axis_moment(rho, axis, 2) / mass;
    return {m1, m2 - m1 * m1};
}

ScalarField normalize_rho(const ScalarField& rho) {
    if (!rho.all_finite()) throw std::invalid_argument("normalize_rho: non-finite density");
    for (std::size_t i = 0; i < rho.size(); ++i)
        if (rho[i] < 0.0) throw std::invalid_argument("normalize_rho: negative density");
    const double mass = integral(rho);
    if (mass <= 0.0) throw std::invalid_argument("normalize_rho: vanishing integral");
    ScalarField out = rho;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] /= mass;
    return out;
}

ScalarField gauge_fix(const ScalarField& S, const ScalarField& rho) {
    if (!S.grid().same_as(rho.grid())) throw std::invalid_argument("gauge_fix: grid mismatch");
    if (!S.all_finite()) throw std::invalid_argument("gauge_fix: non-finite phase");
    const double mass = integral(rho);
    if (mass <= 0.0) throw std::invalid_argument("gauge_fix: vanishing density mass");
    double weighted = 0.0;
    for (std::size_t i = 0; i < S.size(); ++i)
        weighted += S.grid().trapezoid_weight(i) * rho[i] * S[i];
    const double mean = weighted / mass;
    ScalarField out = S;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= mean;
    return out;
}

ScalarField gaussian_field(const Grid& grid, double mean, double variance) {
    if (grid.dim() != 1) throw std::invalid_argument("gaussian_field: 1-D only");
    if (variance <= 0.0) throw std::invalid_argument("gaussian_field: variance must be positive");
    const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * variance);
    return ScalarField(grid, [&](double x) {
        const double d = x - mean;
        return norm * std::exp(-0.5 * d * d / variance);
    });
}

double l1_distance(const ScalarField& a, const ScalarField& b) {
    if (!a.grid().same_as(b.grid())) throw std::invalid_argument("l1_distance: grid mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        sum += a.grid().trapezoid_weight(i) * std::abs(a[i] - b[i]);
    return sum;
}

}  // namespace markovdiff
