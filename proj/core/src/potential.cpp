#include "markovdiff/potential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace markovdiff {

Potential Potential::free() {
    Potential p;
    p.kind_ = "free";
    p.value_ = [](const std::array<double, 3>&, int) { return 0.0; };
    p.grad_ = [](const std::array<double, 3>&, int, int) { return 0.0; };
    return p;
}

Potential Potential::harmonic(double k) {
    if (!(k > 0.0)) throw std::invalid_argument("potential: harmonic stiffness must be positive");
    Potential p;
    p.kind_ = "harmonic";
    p.value_ = [k](const std::array<double, 3>& x, int dim) {
        double r2 = 0.0;
        for (int a = 0; a < dim; ++a) r2 += x[a] * x[a];
        return 0.5 * k * r2;
    };
    p.grad_ = [k](const std::array<double, 3>& x, int, int axis) { return k * x[axis]; };
    return p;
}

namespace {

struct HermiteTable {
    std::vector<double> x, v, slope;

    double eval(double xq, bool derivative) const {
        const std::size_t n = x.size();
        if (xq <= x.front()) {
            return derivative ? slope.front() : v.front() + slope.front() * (xq - x.front());
        }
        if (xq >= x.back()) {
            return derivative ? slope.back() : v.back() + slope.back() * (xq - x.back());
        }
        const auto it = std::upper_bound(x.begin(), x.end(), xq);
        const std::size_t i = static_cast<std::size_t>(it - x.begin()) - 1;
        const double hseg = x[i + 1] - x[i];
        const double s = (xq - x[i]) / hseg;
        const double p0 = v[i], p1 = v[i + 1];
        const double m0 = slope[i] * hseg, m1 = slope[i + 1] * hseg;
        if (!derivative) {
            const double s2 = s * s, s3 = s2 * s;
            return (2 * s3 - 3 * s2 + 1) * p0 + (s3 - 2 * s2 + s) * m0 +
                   (-2 * s3 + 3 * s2) * p1 + (s3 - s2) * m1;
        }
        const double ds2 = 2 * s, ds3 = 3 * s * s;
        return ((ds3 * 2 - 3 * ds2) * p0 + (ds3 - 2 * ds2 + 1) * m0 + (-2 * ds3 + 3 * ds2) * p1 +
                (ds3 - ds2) * m1) / hseg;
    }
};

}  // namespace

Potential Potential::table(std::vector<double> x, std::vector<double> v) {
    if (x.size() != v.size() || x.size() < 4)
        throw std::invalid_argument("potential: table needs >= 4 matching samples");
    for (std::size_t i = 1; i < x.size(); ++i)
        if (!(x[i] > x[i - 1])) throw std::invalid_argument("potential: table abscissae must increase");

    HermiteTable tbl;
    tbl.x = std::move(x);
    tbl.v = std::move(v);
    tbl.slope.resize(tbl.x.size());
    const std::size_t n = tbl.x.size();
    tbl.slope[0] = (tbl.v[1] - tbl.v[0]) / (tbl.x[1] - tbl.x[0]);
    tbl.slope[n - 1] = (tbl.v[n - 1] - tbl.v[n - 2]) / (tbl.x[n - 1] - tbl.x[n - 2]);
    for (std::size_t i = 1; i + 1 < n; ++i)
        tbl.slope[i] = (tbl.v[i + 1] - tbl.v[i - 1]) / (tbl.x[i + 1] - tbl.x[i - 1]);

    Potential p;
    p.kind_ = "table";
    p.value_ = [tbl](const std::array<double, 3>& xq, int dim) {
        if (dim != 1) throw std::invalid_argument("potential: table is 1-D");
        return tbl.eval(xq[0], false);
    };
    p.grad_ = [tbl](const std::array<double, 3>& xq, int dim, int) {
        if (dim != 1) throw std::invalid_argument("potential: table is 1-D");
        return tbl.eval(xq[0], true);
    };
    return p;
}

ScalarField Potential::sample(const Grid& grid) const {
    return ScalarField(grid, [this](const std::array<double, 3>& x, int dim) {
        return value(x, dim);
    });
}

}  // namespace markovdiff
