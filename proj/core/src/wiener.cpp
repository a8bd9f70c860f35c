#include "markovdiff/wiener.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "markovdiff/rng.hpp"

namespace markovdiff::sde {

namespace {

void fill_range(PathSet& out, double nu, std::size_t begin, std::size_t end) {
    const auto times = out.times();
    const int dim = out.dim();
    const double sqrt_first = std::sqrt(nu * times.front());
    const double sqrt_step = std::sqrt(nu * out.dt());
    for (std::size_t p = begin; p < end; ++p) {
        SubstreamRng rng(out.seed(), p);
        for (int a = 0; a < dim; ++a)
            out.position(p, 0, a) = times.front() > 0.0 ? sqrt_first * rng.normal() : 0.0;
        for (std::size_t ti = 1; ti < times.size(); ++ti)
            for (int a = 0; a < dim; ++a)
                out.position(p, ti, a) = out.position(p, ti - 1, a) + sqrt_step * rng.normal();
    }
}

}  // namespace

PathSet sample_wiener(double nu, std::vector<double> times, std::size_t n_paths,
                      std::uint64_t seed, int dim, int n_threads) {
    if (!(nu > 0.0)) throw std::invalid_argument("wiener: nu must be positive");
    if (times.empty() || times.front() < 0.0)
        throw std::invalid_argument("wiener: times must start at >= 0");
    PathSet out(std::move(times), dim, n_paths, seed);

    std::size_t workers = n_threads > 0 ? static_cast<std::size_t>(n_threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, std::max<std::size_t>(1, n_paths / 1024));
    if (workers <= 1) {
        fill_range(out, nu, 0, n_paths);
        return out;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (n_paths + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n_paths, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&out, nu, begin, end] { fill_range(out, nu, begin, end); });
    }
    for (auto& th : pool) th.join();
    return out;
}

std::vector<double> uniform_times(double t0, double dt, std::size_t n_steps) {
    std::vector<double> times(n_steps + 1);
    for (std::size_t i = 0; i <= n_steps; ++i) times[i] = t0 + dt * static_cast<double>(i);
    return times;
}

}  // namespace markovdiff::sde
