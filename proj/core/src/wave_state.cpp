#include "markovdiff/wave_state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace markovdiff {

WaveState WaveState::from_density(const ScalarField& rho, const ScalarField& S, double t) {
    ScalarField normalized = normalize_rho(rho);
    ScalarField R(normalized.grid());
    for (std::size_t i = 0; i < R.size(); ++i)
        R[i] = 0.5 * std::log(std::max(normalized[i], kRhoFloor));
    WaveState st;
    st.S = gauge_fix(S, normalized);
    st.R = std::move(R);
    st.t = t;
    return st;
}

ScalarField WaveState::rho() const {
    ScalarField out(R.grid());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::exp(2.0 * R[i]);
    return out;
}

std::vector<std::complex<double>> WaveState::psi(double beta_mag) const {
    std::vector<std::complex<double>> out(R.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double amp = std::exp(R[i]);
        const double phase = beta_mag * S[i];
        out[i] = std::complex<double>(amp * std::cos(phase), amp * std::sin(phase));
    }
    return out;
}

namespace {

// Unwraps along one axis away from the anchor index, line by line.
void unwrap_axis(const Grid& g, std::vector<double>& theta, int axis, int anchor,
                 const std::vector<bool>& line_done) {
    const std::size_t stride = g.stride(axis);
    const int n = g.n(axis);
    const double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t base = 0; base < g.size(); ++base) {
        const auto idx = g.unravel(base);
        if (idx[axis] != anchor) continue;
        if (!line_done.empty() && !line_done[base]) continue;
        for (int i = anchor + 1; i < n; ++i) {
            const std::size_t cur = base + stride * (i - anchor);
            const std::size_t prev = cur - stride;
            double d = theta[cur] - theta[prev];
            d -= two_pi * std::round(d / two_pi);
            theta[cur] = theta[prev] + d;
        }
        for (int i = anchor - 1; i >= 0; --i) {
            const std::size_t cur = base - stride * (anchor - i);
            const std::size_t prev = cur + stride;
            double d = theta[cur] - theta[prev];
            d -= two_pi * std::round(d / two_pi);
            theta[cur] = theta[prev] + d;
        }
    }
}

}  // namespace

std::vector<double> unwrap_phase(const Grid& grid, std::span<const double> wrapped) {
    std::vector<double> theta(wrapped.begin(), wrapped.end());
    std::array<int, 3> anchor{0, 0, 0};
    for (int a = 0; a < grid.dim(); ++a) anchor[a] = grid.n(a) / 2;

    // Unwrap the anchor line of the last axis first, then sweep outward one
    // axis at a time so every line starts from an already-unwrapped point.
    for (int a = grid.dim() - 1; a >= 0; --a) {
        std::vector<bool> seed(grid.size(), false);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const auto idx = grid.unravel(i);
            bool on_seed = idx[a] == anchor[a];
            for (int b = 0; b < a; ++b) on_seed = on_seed && (idx[b] == anchor[b]);
            seed[i] = on_seed;
        }
        unwrap_axis(grid, theta, a, anchor[a], seed);
    }
    return theta;
}

WaveState WaveState::from_psi(const Grid& grid, std::span<const std::complex<double>> psi,
                              double beta_mag, double t) {
    if (psi.size() != grid.size()) throw std::invalid_argument("from_psi: size mismatch");
    if (!(beta_mag > 0.0) || !std::isfinite(beta_mag))
        throw std::invalid_argument("from_psi: beta magnitude must be positive and finite");
    ScalarField R(grid);
    std::vector<double> wrapped(grid.size());
    ScalarField rho(grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double a2 = std::norm(psi[i]);
        rho[i] = a2;
        R[i] = 0.5 * std::log(std::max(a2, kRhoFloor));
        wrapped[i] = std::atan2(psi[i].imag(), psi[i].real());
    }
    const std::vector<double> theta = unwrap_phase(grid, wrapped);
    ScalarField S(grid);
    for (std::size_t i = 0; i < grid.size(); ++i) S[i] = theta[i] / beta_mag;
    WaveState st;
    st.R = std::move(R);
    st.S = gauge_fix(S, rho);
    st.t = t;
    return st;
}

}  // namespace markovdiff
