#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "markovdiff/diffusion.hpp"
#include "markovdiff/estimators.hpp"
#include "markovdiff/rng.hpp"
#include "markovdiff/wick.hpp"
#include "markovdiff/wiener.hpp"
#include "oracles.hpp"

using namespace markovdiff;
using namespace markovdiff::sde;

namespace {
constexpr std::uint64_t kSeed = 20260809;

double covariance(const PathSet& paths, std::size_t ti, std::size_t tj) {
    double sum = 0.0;
    for (std::size_t p = 0; p < paths.n_paths(); ++p)
        sum += paths.position(p, ti) * paths.position(p, tj);
    return sum / static_cast<double>(paths.n_paths());
}

double covariance_se(const PathSet& paths, std::size_t ti, std::size_t tj) {
    double sum = 0.0, sumsq = 0.0;
    const auto n = static_cast<double>(paths.n_paths());
    for (std::size_t p = 0; p < paths.n_paths(); ++p) {
        const double v = paths.position(p, ti) * paths.position(p, tj);
        sum += v;
        sumsq += v * v;
    }
    const double mean = sum / n;
    return std::sqrt(std::max(sumsq / n - mean * mean, 0.0) / (n - 1.0));
}
}  // namespace

TEST_CASE("wiener covariance matches nu*min over a 4x4 block") {
    const double nu = 0.5;
    auto paths = sample_wiener(nu, uniform_times(0.0, 0.5, 4), 100000, kSeed);
    // times 0.5, 1, 1.5, 2 at indices 1..4
    for (std::size_t i = 1; i <= 4; ++i) {
        for (std::size_t j = i; j <= 4; ++j) {
            const double expected = nu * paths.times()[i];
            const double got = covariance(paths, i, j);
            const double se = covariance_se(paths, i, j);
            CHECK(std::abs(got - expected) <= 5.0 * se);
        }
    }
    // zero-mean process within 5 se
    auto mean = mc_mean(paths, [](const PathSet::PathView& v) { return v.at(4); });
    CHECK(std::abs(mean.value) <= 5.0 * mean.se);
}

TEST_CASE("fixed seed reproduces paths bit for bit") {
    auto a = sample_wiener(1.0, uniform_times(0.0, 0.1, 20), 512, 99, 1, 4);
    auto b = sample_wiener(1.0, uniform_times(0.0, 0.1, 20), 512, 99, 1, 1);
    for (std::size_t p = 0; p < a.n_paths(); ++p)
        for (std::size_t ti = 0; ti < a.n_times(); ++ti)
            CHECK(a.position(p, ti) == b.position(p, ti));
}

TEST_CASE("wiener rejects bad input") {
    CHECK_THROWS_AS(sample_wiener(0.0, uniform_times(0.0, 0.1, 4), 8, 1), std::invalid_argument);
    std::vector<double> bad{0.0, 0.2, 0.1};
    CHECK_THROWS_AS(sample_wiener(1.0, bad, 8, 1), std::invalid_argument);
    std::vector<double> nonuniform{0.0, 0.1, 0.3};
    CHECK_THROWS_AS(sample_wiener(1.0, nonuniform, 8, 1), std::invalid_argument);
}

TEST_CASE("wick moments") {
    // odd order vanishes
    std::vector<double> odd{0.5, 1.0, 2.0};
    CHECK(wick_moment(odd, 1.0) == 0.0);
    // equal times t=1: three pairings of (min)^2 = 3
    std::vector<double> equal{1.0, 1.0, 1.0, 1.0};
    CHECK(wick_moment(equal, 1.0) == doctest::Approx(3.0).epsilon(1e-14));
    // two points, nu = 2: 2 * min(1,2) = 2
    std::vector<double> two{1.0, 2.0};
    CHECK(wick_moment(two, 2.0) == doctest::Approx(2.0).epsilon(1e-14));
    // n = 0 normalizes to 1
    CHECK(wick_moment(std::vector<double>{}, 1.0) == 1.0);
}

TEST_CASE("4-point Monte Carlo moment agrees with the pairing formula") {
    const double nu = 1.0;
    auto paths = sample_wiener(nu, uniform_times(0.0, 0.5, 4), 100000, kSeed + 1);
    const std::vector<std::vector<std::size_t>> picks = {
        {1, 2, 3, 4}, {1, 1, 2, 2}, {2, 2, 2, 2}, {1, 3, 3, 4}};
    for (const auto& idx : picks) {
        std::vector<double> ts;
        for (auto i : idx) ts.push_back(paths.times()[i]);
        const double expected = wick_moment(ts, nu);
        auto est = mc_mean(paths, [&](const PathSet::PathView& v) {
            double prod = 1.0;
            for (auto i : idx) prod *= v.at(i);
            return prod;
        });
        CHECK(std::abs(est.value - expected) <= 5.0 * est.se);
    }
}

TEST_CASE("drift-free diffusion reduces to the wiener statistics") {
    DriftSpec none{[](double, double) { return 0.0; }, 0.0, 1e-6};
    auto res = simulate_diffusion(none, 1.0, [](SubstreamRng&) { return 0.0; }, 0.01, 100,
                                  40000, kSeed + 2);
    CHECK(res.aborted_paths.empty());
    auto var = mc_mean(res.paths, [](const PathSet::PathView& v) { return v.at(100) * v.at(100); });
    CHECK(std::abs(var.value - 1.0) <= 5.0 * var.se);
}

TEST_CASE("OU long-run variance matches the stationary law") {
    const double nu = 1.0;
    DriftSpec ou{[](double x, double) { return -x; }, 1.0, 2.0};
    validate_drift(ou, -6.0, 6.0, 0.0, 10.0);
    auto res = simulate_diffusion(ou, nu, [](SubstreamRng&) { return 0.0; }, 0.01, 800, 40000,
                                  kSeed + 3);
    auto var = mc_mean(res.paths, [](const PathSet::PathView& v) { return v.at(800) * v.at(800); });
    const double expected = oracles::ou_stationary_variance(1.0, nu);
    CHECK(std::abs(var.value - expected) <= 5.0 * var.se);
}

TEST_CASE("constant drift advects the mean linearly") {
    DriftSpec one{[](double, double) { return 1.0; }, 0.0, 1.5};
    auto res = simulate_diffusion(one, 0.5, [](SubstreamRng&) { return 0.0; }, 0.01, 100, 20000,
                                  kSeed + 4);
    auto mean = mc_mean(res.paths, [](const PathSet::PathView& v) { return v.at(100); });
    CHECK(std::abs(mean.value - 1.0) <= 5.0 * mean.se);
}

TEST_CASE("drift bound violations abort the offending paths") {
    // Quadratic drift breaks |b| <= k sqrt(1+x^2) once |x| grows.
    DriftSpec quad{[](double x, double) { return 0.3 * x * x; }, 8.0, 1.0};
    auto res = simulate_diffusion(quad, 1.0, [](SubstreamRng& rng) { return 4.0 + rng.normal(); },
                                  0.01, 50, 2000, kSeed + 5);
    CHECK(!res.aborted_paths.empty());
    CHECK(res.paths.n_paths() + res.aborted_paths.size() == 2000);
}

TEST_CASE("euler-maruyama strong error shrinks at least as sqrt(dt)") {
    // Strong error against the exactly discretized OU solution driven by the
    // same deviates. Additive noise makes the scheme first order here, so the
    // ratio sits near 2; the guaranteed order-1/2 floor is sqrt(2).
    const double gamma = 1.0, nu = 1.0, t_end = 1.0;
    auto strong_error = [&](double dt) {
        const auto n_steps = static_cast<std::size_t>(std::llround(t_end / dt));
        const auto step = oracles::ou_exact_step(gamma, nu, dt);
        const std::size_t n_paths = 20000;
        double err = 0.0;
        for (std::size_t p = 0; p < n_paths; ++p) {
            SubstreamRng rng(kSeed + 6, p);
            double x_em = 1.0, x_exact = 1.0;
            for (std::size_t k = 0; k < n_steps; ++k) {
                const double z = rng.normal();
                x_em += -gamma * x_em * dt + std::sqrt(nu * dt) * z;
                x_exact = step.decay * x_exact + step.noise_sd * z;
            }
            err += std::abs(x_em - x_exact);
        }
        return err / static_cast<double>(n_paths);
    };
    const double e1 = strong_error(0.02);
    const double e2 = strong_error(0.01);
    const double ratio = e1 / e2;
    INFO("strong error ratio when halving dt: ", ratio);
    CHECK(ratio >= 1.3);
    CHECK(ratio <= 2.8);
}

TEST_CASE("forward drift estimator recovers b = -x at five bin centers") {
    const double nu = 1.0;
    DriftSpec ou{[](double x, double) { return -x; }, 1.0, 2.0};
    // start from the stationary density so every bin is populated
    auto res = simulate_diffusion(ou, nu,
                                  [](SubstreamRng& rng) { return std::sqrt(0.5) * rng.normal(); },
                                  0.005, 70, 300000, kSeed + 7);
    const double t = 0.25;
    for (double center : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        auto est = estimate_forward_drift(res.paths, center, t, 0.025);
        CHECK(est.count >= 100);
        CHECK(std::abs(est.value - (-center)) <= 5.0 * std::max(est.se, 1e-3));
    }
}

TEST_CASE("forward drift of the driftless process is zero") {
    DriftSpec none{[](double, double) { return 0.0; }, 0.0, 1e-6};
    auto res = simulate_diffusion(none, 1.0, [](SubstreamRng&) { return 0.0; }, 0.005, 70, 100000,
                                  kSeed + 8);
    auto est = estimate_forward_drift(res.paths, 0.0, 0.25, 0.025);
    CHECK(std::abs(est.value) <= 5.0 * est.se);
}

TEST_CASE("quadratic variation recovers nu") {
    const double nu = 1.0;
    DriftSpec ou{[](double x, double) { return -x; }, 1.0, 2.0};
    auto res = simulate_diffusion(ou, nu,
                                  [](SubstreamRng& rng) { return std::sqrt(0.5) * rng.normal(); },
                                  0.005, 70, 200000, kSeed + 9);
    for (double center : {-0.5, 0.0, 1.0}) {
        auto est = estimate_quadratic_variation(res.paths, center, 0.25, 0.025);
        CHECK(std::abs(est.value - nu) <= 5.0 * est.se);
    }
}

TEST_CASE("forward drift validates the probe step and bin occupancy") {
    DriftSpec none{[](double, double) { return 0.0; }, 0.0, 1e-6};
    auto res = simulate_diffusion(none, 1.0, [](SubstreamRng&) { return 0.0; }, 0.005, 70, 1000,
                                  kSeed + 10);
    CHECK_THROWS_AS(estimate_forward_drift(res.paths, 0.0, 0.25, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(estimate_forward_drift(res.paths, 25.0, 0.25, 0.025), EmptyBinError);
}

TEST_CASE("estimator window enforces the limit ordering") {
    CHECK_THROWS_AS(EstimatorWindow(0.05, 0.1, 0.1), std::invalid_argument);
    CHECK_NOTHROW(EstimatorWindow(0.01, 0.1, 0.1));
}

TEST_CASE("conditional velocity matches the bridge slope") {
    const double nu = 1.0;
    const double t = 0.6;
    EstimatorWindow window(0.02, 0.2, 0.2);
    auto paths = sample_wiener(nu, uniform_times(0.0, 0.01, 81), 200000, kSeed + 11);

    auto est = estimate_conditional_velocity(paths, window, 0.0, 0.2, t);
    const double expected = 0.2 / 0.4;
    CHECK(std::abs(est.value - expected) <= 5.0 * est.se);

    auto sym = estimate_conditional_velocity(paths, window, 0.1, 0.1, t);
    CHECK(std::abs(sym.value) <= 5.0 * sym.se);

    CHECK_THROWS_AS(estimate_conditional_velocity(paths, window, 9.0, -9.0, t), EmptyBinError);
}

TEST_CASE("one-sided velocity correlations") {
    const double nu = 1.0;
    EstimatorWindow window(0.02, 0.2, 0.2);
    auto paths = sample_wiener(nu, uniform_times(0.0, 0.01, 130), 150000, kSeed + 12);
    // velocity at t then position later -> nu
    std::vector<ObservableAt> later{{Observable::Velocity, 0.6}, {Observable::Position, 0.9}};
    auto est_later = mc_ordered_expectation(paths, later, window);
    CHECK(std::abs(est_later.value - nu) <= 5.0 * est_later.se);
    // position earlier than the velocity -> 0
    std::vector<ObservableAt> earlier{{Observable::Position, 0.3}, {Observable::Velocity, 0.6}};
    auto est_earlier = mc_ordered_expectation(paths, earlier, window);
    CHECK(std::abs(est_earlier.value) <= 5.0 * est_earlier.se);
}

TEST_CASE("ordered expectations: positions, mixed, and vanishing acceleration") {
    const double nu = 1.0;
    EstimatorWindow window(0.05, 0.5, 0.5);
    auto paths = sample_wiener(nu, uniform_times(0.0, 0.025, 100), 200000, kSeed + 13);

    std::vector<ObservableAt> ww{{Observable::Position, 1.0}, {Observable::Position, 2.0}};
    auto est_ww = mc_ordered_expectation(paths, ww, window);
    CHECK(std::abs(est_ww.value - 1.0) <= 5.0 * est_ww.se);

    std::vector<ObservableAt> acc{{Observable::Acceleration, 1.0}, {Observable::Position, 2.0}};
    auto est_acc = mc_ordered_expectation(paths, acc, window);
    CHECK(std::abs(est_acc.value) <= 5.0 * est_acc.se);

    std::vector<ObservableAt> bare_acc{{Observable::Acceleration, 1.5}};
    auto est_bare = mc_ordered_expectation(paths, bare_acc, window);
    CHECK(std::abs(est_bare.value) <= 5.0 * est_bare.se);

    // spacing guard
    std::vector<ObservableAt> tight{{Observable::Position, 1.0}, {Observable::Position, 1.1}};
    CHECK_THROWS_AS(mc_ordered_expectation(paths, tight, window), std::invalid_argument);
}
