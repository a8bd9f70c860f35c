#include "markovdiff/diffusion.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "markovdiff/wiener.hpp"

namespace markovdiff::sde {

bool DriftSpec::satisfies_growth(double x, double t, double slack) const {
    const double bound = growth_bound * std::sqrt(1.0 + x * x);
    return std::abs(b(x, t)) <= bound * (1.0 + slack) + slack;
}

void validate_drift(const DriftSpec& spec, double x_lo, double x_hi, double t_lo, double t_hi,
                    int n_probe) {
    if (!spec.b) throw std::invalid_argument("drift: missing callable");
    if (!(spec.growth_bound > 0.0) || !std::isfinite(spec.lipschitz_bound))
        throw std::invalid_argument("drift: bounds must be positive and finite");
    const double dx = (x_hi - x_lo) / (n_probe - 1);
    const double t_mid = 0.5 * (t_lo + t_hi);
    for (int i = 0; i < n_probe; ++i) {
        const double x = x_lo + dx * i;
        for (double t : {t_lo, t_mid, t_hi}) {
            if (!spec.satisfies_growth(x, t))
                throw std::invalid_argument("drift: growth bound violated at probe point");
            if (i > 0) {
                const double slope = std::abs(spec.b(x, t) - spec.b(x - dx, t)) / dx;
                if (slope > spec.lipschitz_bound * (1.0 + 1e-6) + 1e-9)
                    throw std::invalid_argument("drift: Lipschitz bound violated at probe point");
            }
        }
    }
}

DiffusionResult simulate_diffusion(const DriftSpec& drift, double nu,
                                   const std::function<double(SubstreamRng&)>& x0_sampler,
                                   double dt, std::size_t n_steps, std::size_t n_paths,
                                   std::uint64_t seed, int n_threads) {
    if (!(nu > 0.0)) throw std::invalid_argument("diffusion: nu must be positive");
    if (!(dt > 0.0)) throw std::invalid_argument("diffusion: dt must be positive");
    if (dt * drift.lipschitz_bound >= 0.1)
        throw std::invalid_argument("diffusion: dt * K must stay below 0.1");

    PathSet paths(uniform_times(0.0, dt, n_steps), 1, n_paths, seed);
    const double noise = std::sqrt(nu * dt);

    std::mutex abort_mutex;
    std::vector<std::size_t> aborted;

    auto integrate_range = [&](std::size_t begin, std::size_t end) {
        std::vector<std::size_t> local_aborted;
        for (std::size_t p = begin; p < end; ++p) {
            SubstreamRng rng(seed, p);
            double x = x0_sampler(rng);
            paths.position(p, 0) = x;
            bool ok = true;
            for (std::size_t k = 0; k < n_steps; ++k) {
                const double t = dt * static_cast<double>(k);
                if (!drift.satisfies_growth(x, t)) {
                    ok = false;
                    break;
                }
                x += drift.b(x, t) * dt + noise * rng.normal();
                paths.position(p, k + 1) = x;
            }
            if (!ok || !std::isfinite(x)) local_aborted.push_back(p);
        }
        if (!local_aborted.empty()) {
            std::scoped_lock lock(abort_mutex);
            aborted.insert(aborted.end(), local_aborted.begin(), local_aborted.end());
        }
    };

    std::size_t workers = n_threads > 0 ? static_cast<std::size_t>(n_threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, std::max<std::size_t>(1, n_paths / 1024));
    if (workers <= 1) {
        integrate_range(0, n_paths);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (n_paths + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(n_paths, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(integrate_range, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    std::sort(aborted.begin(), aborted.end());
    if (!aborted.empty()) {
        std::vector<std::size_t> keep;
        keep.reserve(n_paths - aborted.size());
        std::size_t next_abort = 0;
        for (std::size_t p = 0; p < n_paths; ++p) {
            if (next_abort < aborted.size() && aborted[next_abort] == p) {
                ++next_abort;
            } else {
                keep.push_back(p);
            }
        }
        paths.keep_paths(keep);
    }
    return DiffusionResult{std::move(paths), std::move(aborted)};
}

}  // namespace markovdiff::sde
