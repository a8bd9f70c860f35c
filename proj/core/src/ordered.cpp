#include "markovdiff/ordered.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "markovdiff/operators.hpp"
#include "markovdiff/stencil.hpp"

namespace markovdiff::hilbert {

namespace {

Eigen::VectorXd to_vec(const ScalarField& f) {
    return Eigen::Map<const Eigen::VectorXd>(f.values().data(),
                                             static_cast<Eigen::Index>(f.size()));
}

double weighted_pair(const ScalarField& weight, const Eigen::VectorXd& v) {
    double sum = 0.0;
    for (std::size_t i = 0; i < weight.size(); ++i)
        sum += weight.grid().trapezoid_weight(i) * weight[i] * v[static_cast<Eigen::Index>(i)];
    return sum;
}

}  // namespace

double time_ordered_correlation(std::span<const OrderedFactor> factors, const ScalarField& rho_t,
                                double nu) {
    if (rho_t.grid().dim() != 1) throw std::invalid_argument("ordered: 1-D only");
    if (factors.size() > 4) throw std::invalid_argument("ordered: at most 4 factors");
    for (std::size_t i = 1; i < factors.size(); ++i)
        if (!(factors[i].offset >= factors[i - 1].offset))
            throw std::invalid_argument("ordered: offsets must ascend");

    const Grid& g = rho_t.grid();
    const Eigen::MatrixXd D = stencil::derivative_matrix(g, 1);
    const int n = g.n(0);

    Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
    // apply right to left: the latest factor acts first
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        switch (it->kind) {
            case Slot::X: {
                Eigen::VectorXd dv = nu * it->offset * (D * v);
                for (int i = 0; i < n; ++i) dv[i] += g.coord(0, i) * v[i];
                v = std::move(dv);
                break;
            }
            case Slot::XDot:
                v = nu * (D * v);
                break;
            case Slot::XDdot:
                v.setZero();
                break;
        }
    }
    return weighted_pair(rho_t, v);
}

double time_ordered_correlation(std::span<const double> offsets, const ScalarField& rho_t,
                                double nu) {
    std::vector<OrderedFactor> factors;
    factors.reserve(offsets.size());
    for (double s : offsets) factors.push_back({Slot::X, s});
    return time_ordered_correlation(factors, rho_t, nu);
}

double ordered_polynomial_expectation(std::span<const Slot> f_spec, const ScalarField& R,
                                      const ScalarField& S, double nu,
                                      const ScalarField* db_dt) {
    if (R.grid().dim() != 1) throw std::invalid_argument("ordered: 1-D only");
    if (!R.grid().same_as(S.grid())) throw std::invalid_argument("ordered: grid mismatch");
    if (f_spec.size() > 4) throw std::invalid_argument("ordered: degree at most 4");
    const Grid& g = R.grid();
    const int n = g.n(0);

    // drift and its pointwise acceleration (the -dU/dx substitution)
    ScalarField rs(g);
    for (std::size_t i = 0; i < rs.size(); ++i) rs[i] = R[i] + S[i];
    ScalarField b = stencil::derivative(rs, 0, 1);
    for (std::size_t i = 0; i < b.size(); ++i) b[i] *= nu;
    std::vector<ScalarField> bvec{b};
    std::vector<ScalarField> dbdt_vec;
    const std::vector<ScalarField>* dbdt_ptr = nullptr;
    if (db_dt) {
        dbdt_vec.push_back(*db_dt);
        dbdt_ptr = &dbdt_vec;
    }
    const ScalarField accel = acceleration_field(bvec, nu, dbdt_ptr)[0];

    const Eigen::MatrixXd D = stencil::derivative_matrix(g, 1);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = std::exp(rs[i]);

    for (auto it = f_spec.rbegin(); it != f_spec.rend(); ++it) {
        switch (*it) {
            case Slot::X:
                for (int i = 0; i < n; ++i) v[i] *= g.coord(0, i);
                break;
            case Slot::XDot:
                v = nu * (D * v);
                break;
            case Slot::XDdot:
                for (int i = 0; i < n; ++i) v[i] *= accel[i];
                break;
        }
    }

    ScalarField weight(g);
    for (std::size_t i = 0; i < weight.size(); ++i) weight[i] = std::exp(R[i] - S[i]);
    return weighted_pair(weight, v);
}

ScalarField heat_smooth(const ScalarField& f, double variance) {
    const Grid& g = f.grid();
    if (g.dim() != 1) throw std::invalid_argument("heat_smooth: 1-D only");
    if (!(variance > 0.0)) throw std::invalid_argument("heat_smooth: variance must be positive");
    const int n = g.n(0);
    const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * variance);
    ScalarField out(g);
    for (int i = 0; i < n; ++i) {
        const double xi = g.coord(0, i);
        double sum = 0.0;
        for (int j = 0; j < n; ++j) {
            const double d = xi - g.coord(0, j);
            sum += g.trapezoid_weight(j) * norm * std::exp(-0.5 * d * d / variance) * f[j];
        }
        out[i] = sum;
    }
    return out;
}

double delta_density(const ScalarField& rho_t, double nu, double s1, std::size_t y_index) {
    const Grid& g = rho_t.grid();
    if (g.dim() != 1) throw std::invalid_argument("delta_density: 1-D only");
    if (!(s1 > 0.0)) throw std::invalid_argument("delta_density: offset must be positive");
    // indicator / h at y, smoothed over the elapsed offset, paired with rho
    ScalarField spike(g);
    spike[y_index] = 1.0 / g.h(0);
    const ScalarField smoothed = heat_smooth(spike, nu * s1);
    double sum = 0.0;
    for (std::size_t i = 0; i < smoothed.size(); ++i)
        sum += g.trapezoid_weight(i) * rho_t[i] * smoothed[i];
    return sum;
}

double delta_density2(const ScalarField& rho_t, double nu, double s1, std::size_t y_index,
                      double s2, std::size_t z_index) {
    const Grid& g = rho_t.grid();
    if (g.dim() != 1) throw std::invalid_argument("delta_density2: 1-D only");
    if (!(s1 > 0.0) || !(s2 > s1)) throw std::invalid_argument("delta_density2: need 0 < s1 < s2");
    ScalarField spike_z(g);
    spike_z[z_index] = 1.0 / g.h(0);
    const ScalarField later = heat_smooth(spike_z, nu * (s2 - s1));
    ScalarField gated(g);
    gated[y_index] = later[y_index] / g.h(0);
    const ScalarField smoothed = heat_smooth(gated, nu * s1);
    double sum = 0.0;
    for (std::size_t i = 0; i < smoothed.size(); ++i)
        sum += g.trapezoid_weight(i) * rho_t[i] * smoothed[i];
    return sum;
}

std::pair<double, double> delta_completeness_sides(std::span<const Slot> f_spec,
                                                   std::span<const Slot> g_spec,
                                                   const ScalarField& rho, double nu) {
    const Grid& g = rho.grid();
    if (g.dim() != 1) throw std::invalid_argument("delta_completeness: 1-D only");
    const int n = g.n(0);
    const Eigen::MatrixXd D = stencil::derivative_matrix(g, 1);

    auto apply_spec = [&](std::span<const Slot> spec, Eigen::VectorXd v) {
        for (auto it = spec.rbegin(); it != spec.rend(); ++it) {
            switch (*it) {
                case Slot::X:
                    for (int i = 0; i < n; ++i) v[i] *= g.coord(0, i);
                    break;
                case Slot::XDot:
                    v = nu * (D * v);
                    break;
                case Slot::XDdot:
                    v.setZero();
                    break;
            }
        }
        return v;
    };

    // <delta_z g> = rho(z) * [g-op 1](z)
    const Eigen::VectorXd g_on_one = apply_spec(g_spec, Eigen::VectorXd::Ones(n));

    // <f delta_z> applies the f operator to the indicator spike
    double lhs = 0.0;
    for (int z = 0; z < n; ++z) {
        if (rho[z] < 1e-14) continue;  // tail grid points carry no weight
        Eigen::VectorXd spike = Eigen::VectorXd::Zero(n);
        spike[z] = 1.0 / g.h(0);
        const Eigen::VectorXd f_spike = apply_spec(f_spec, std::move(spike));
        double a = 0.0;
        for (int i = 0; i < n; ++i) a += g.trapezoid_weight(i) * rho[i] * f_spike[i];
        const double bval = rho[z] * g_on_one[z];
        lhs += g.trapezoid_weight(z) * a * bval / rho[z];
    }

    // <f g> in one pass
    std::vector<Slot> fg(f_spec.begin(), f_spec.end());
    fg.insert(fg.end(), g_spec.begin(), g_spec.end());
    const Eigen::VectorXd combined = apply_spec(fg, Eigen::VectorXd::Ones(n));
    double rhs = 0.0;
    for (int i = 0; i < n; ++i) rhs += g.trapezoid_weight(i) * rho[i] * combined[i];
    return {lhs, rhs};
}

}  // namespace markovdiff::hilbert
