#include "markovdiff/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "markovdiff/stencil.hpp"

namespace markovdiff::hilbert {

ScalarField OperatorMatrix::apply(const ScalarField& f) const {
    if (!f.grid().same_as(grid)) throw std::invalid_argument("operator: grid mismatch");
    Eigen::Map<const Eigen::VectorXd> v(f.values().data(), static_cast<Eigen::Index>(f.size()));
    Eigen::VectorXd out = matrix * v;
    return ScalarField(grid, std::vector<double>(out.data(), out.data() + out.size()));
}

double weighted_inner_product(const ScalarField& f, const ScalarField& g,
                              const ScalarField& rho) {
    if (!f.grid().same_as(g.grid()) || !f.grid().same_as(rho.grid()))
        throw std::invalid_argument("inner_product: grid mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        sum += f.grid().trapezoid_weight(i) * rho[i] * f[i] * g[i];
    return sum;
}

OperatorMatrix position_operator(const Grid& grid) {
    if (grid.dim() != 1) throw std::invalid_argument("operator: 1-D only");
    const int n = grid.n(0);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = grid.coord(0, i);
    return OperatorMatrix{grid, std::move(m), "x"};
}

OperatorMatrix multiplication_operator(const ScalarField& field, std::string label) {
    if (field.grid().dim() != 1) throw std::invalid_argument("operator: 1-D only");
    const int n = field.grid().n(0);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = field[i];
    return OperatorMatrix{field.grid(), std::move(m), std::move(label)};
}

OperatorMatrix derivative_operator(const Grid& grid, int order) {
    return OperatorMatrix{grid, stencil::derivative_matrix(grid, order),
                          order == 1 ? "d/dx" : "d2/dx2"};
}

OperatorMatrix velocity_operator(const ScalarField& b, double nu) {
    if (b.grid().dim() != 1) throw std::invalid_argument("operator: 1-D only");
    Eigen::MatrixXd m = nu * stencil::derivative_matrix(b.grid(), 1);
    for (int i = 0; i < b.grid().n(0); ++i) m(i, i) += b[i];
    return OperatorMatrix{b.grid(), std::move(m), "xdot"};
}

OperatorMatrix hamiltonian_operator(const ScalarField& b, double nu, const ScalarField& U) {
    OperatorMatrix vel = velocity_operator(b, nu);
    Eigen::MatrixXd m = 0.5 * (vel.matrix * vel.matrix);
    for (int i = 0; i < b.grid().n(0); ++i) m(i, i) += U[i];
    return OperatorMatrix{b.grid(), std::move(m), "H"};
}

double commutator_residual(const OperatorMatrix& A, const OperatorMatrix& B,
                           std::span<const ScalarField> test_fns,
                           const ScalarField& expected_multiplier, int boundary_skip) {
    if (!A.grid.same_as(B.grid)) throw std::invalid_argument("commutator: grid mismatch");
    double worst = 0.0;
    for (const ScalarField& g : test_fns) {
        const ScalarField ab = A.apply(B.apply(g));
        const ScalarField ba = B.apply(A.apply(g));
        ScalarField resid(A.grid);
        for (std::size_t i = 0; i < resid.size(); ++i)
            resid[i] = ab[i] - ba[i] - expected_multiplier[i] * g[i];
        worst = std::max(worst, interior_inf_norm(resid, boundary_skip));
    }
    return worst;
}

namespace {

// v_i g = b_i g + nu d_i g applied through stencils on any-dim grids.
ScalarField apply_velocity_component(const std::vector<ScalarField>& b, double nu, int axis,
                                     const ScalarField& g) {
    ScalarField out = stencil::derivative(g, axis, 1);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = nu * out[i] + b[axis][i] * g[i];
    return out;
}

}  // namespace

double velocity_commutator_residual(const std::vector<ScalarField>& b, double nu, int axis_i,
                                    int axis_j, std::span<const ScalarField> test_fns,
                                    int boundary_skip) {
    const Grid& g0 = b.at(0).grid();
    if (static_cast<int>(b.size()) != g0.dim())
        throw std::invalid_argument("commutator: drift component count must match dim");
    const ScalarField dbj_di = stencil::derivative(b[axis_j], axis_i, 1);
    const ScalarField dbi_dj = stencil::derivative(b[axis_i], axis_j, 1);
    double worst = 0.0;
    for (const ScalarField& g : test_fns) {
        const ScalarField vij = apply_velocity_component(b, nu, axis_i,
                                                         apply_velocity_component(b, nu, axis_j, g));
        const ScalarField vji = apply_velocity_component(b, nu, axis_j,
                                                         apply_velocity_component(b, nu, axis_i, g));
        ScalarField resid(g0);
        for (std::size_t i = 0; i < resid.size(); ++i)
            resid[i] = vij[i] - vji[i] - nu * (dbj_di[i] - dbi_dj[i]) * g[i];
        worst = std::max(worst, interior_inf_norm(resid, boundary_skip));
    }
    return worst;
}

std::vector<ScalarField> acceleration_field(const std::vector<ScalarField>& b, double nu,
                                            const std::vector<ScalarField>* db_dt,
                                            double curl_tol) {
    if (b.empty()) throw std::invalid_argument("acceleration: empty drift");
    const Grid& g = b[0].grid();
    const int dim = g.dim();
    if (static_cast<int>(b.size()) != dim)
        throw std::invalid_argument("acceleration: component count must match dim");

    if (dim > 1) {
        // rotational drift is out of scope; require a (numerically) curl-free field
        for (int i = 0; i < dim; ++i) {
            for (int j = i + 1; j < dim; ++j) {
                const ScalarField dbj_di = stencil::derivative(b[j], i, 1);
                const ScalarField dbi_dj = stencil::derivative(b[i], j, 1);
                double curl = 0.0;
                for (std::size_t k = 0; k < dbj_di.size(); ++k)
                    curl = std::max(curl, std::abs(dbj_di[k] - dbi_dj[k]));
                if (curl > curl_tol)
                    throw std::invalid_argument("acceleration: drift has nonzero curl");
            }
        }
    }

    // |b|^2
    ScalarField bsq(g);
    for (int a = 0; a < dim; ++a)
        for (std::size_t i = 0; i < bsq.size(); ++i) bsq[i] += b[a][i] * b[a][i];

    std::vector<ScalarField> out;
    out.reserve(dim);
    for (int a = 0; a < dim; ++a) {
        ScalarField comp = stencil::laplacian(b[a]);
        const ScalarField grad_bsq = stencil::derivative(bsq, a, 1);
        for (std::size_t i = 0; i < comp.size(); ++i) {
            comp[i] = 0.5 * nu * comp[i] + 0.5 * grad_bsq[i];
            if (db_dt) comp[i] += (*db_dt)[a][i];
        }
        out.push_back(std::move(comp));
    }
    return out;
}

ScalarField stochastic_potential(const ScalarField& acceleration) {
    const Grid& g = acceleration.grid();
    if (g.dim() != 1) throw std::invalid_argument("stochastic_potential: 1-D only");
    ScalarField U(g);
    double acc = 0.0;
    U[0] = 0.0;
    for (int i = 1; i < g.n(0); ++i) {
        acc += 0.5 * g.h(0) * (acceleration[i - 1] + acceleration[i]);
        U[i] = -acc;
    }
    return U;
}

std::pair<double, double> h_asymmetry_check(const ScalarField& U, const ScalarField& b, double nu,
                                            const ScalarField& rho, const ScalarField& f,
                                            const ScalarField& g) {
    const OperatorMatrix H = hamiltonian_operator(b, nu, U);
    const double lhs = weighted_inner_product(f, H.apply(g), rho);
    ScalarField f_rho(f.grid());
    for (std::size_t i = 0; i < f_rho.size(); ++i) f_rho[i] = f[i] * rho[i];
    const ScalarField hf = H.apply(f_rho);
    // (H(f rho), g/rho) under the weighted product is a plain integral of H(f rho) * g
    double rhs = 0.0;
    for (std::size_t i = 0; i < hf.size(); ++i)
        rhs += f.grid().trapezoid_weight(i) * hf[i] * g[i];
    return {lhs, rhs};
}

}  // namespace markovdiff::hilbert
