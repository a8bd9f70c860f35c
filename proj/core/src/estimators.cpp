#include "markovdiff/estimators.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace markovdiff::sde {

EstimatorWindow::EstimatorWindow(double eps, double d1, double d2)
    : epsilon(eps), delta1(d1), delta2(d2) {
    if (!(epsilon > 0.0) || !(delta1 > 0.0) || !(delta2 > 0.0))
        throw std::invalid_argument("window: widths must be positive");
    if (epsilon / delta1 > 0.1 + 1e-12 || epsilon / delta2 > 0.1 + 1e-12)
        throw std::invalid_argument("window: epsilon/delta must not exceed 0.1");
}

namespace {

struct RunningStats {
    double sum = 0.0, sumsq = 0.0;
    std::size_t count = 0;
    void add(double v) {
        sum += v;
        sumsq += v * v;
        ++count;
    }
    McEstimate finish() const {
        McEstimate e;
        e.count = count;
        if (count == 0) return e;
        e.value = sum / static_cast<double>(count);
        const double var = sumsq / static_cast<double>(count) - e.value * e.value;
        e.se = count > 1 ? std::sqrt(std::max(var, 0.0) / static_cast<double>(count - 1)) : 0.0;
        return e;
    }
};

double sample_stddev(const PathSet& paths, std::size_t ti) {
    RunningStats s;
    for (std::size_t p = 0; p < paths.n_paths(); ++p) s.add(paths.position(p, ti));
    const auto est = s.finish();
    return est.se * std::sqrt(static_cast<double>(std::max<std::size_t>(est.count, 2) - 1));
}

// Collects path indices with |x(ti) - center| <= width/2, widening the bin
// until it holds at least min_count paths. Deterministic.
std::vector<std::size_t> adaptive_bin(const PathSet& paths, std::size_t ti, double center,
                                      std::size_t min_count, const char* what) {
    const double sigma = std::max(sample_stddev(paths, ti), 1e-12);
    double width = 0.05 * sigma;
    std::vector<std::size_t> members;
    for (int attempt = 0; attempt < 16; ++attempt) {
        members.clear();
        for (std::size_t p = 0; p < paths.n_paths(); ++p)
            if (std::abs(paths.position(p, ti) - center) <= 0.5 * width) members.push_back(p);
        if (members.size() >= min_count) return members;
        width *= 1.6;
        if (width > 2.0 * sigma) break;
    }
    if (members.empty()) throw EmptyBinError(std::string(what) + ": empty bin");
    if (members.size() < min_count)
        throw EmptyBinError(std::string(what) + ": bin occupancy below requirement");
    return members;
}

}  // namespace

McEstimate estimate_forward_drift(const PathSet& paths, double x_bin, double t, double h,
                                  std::size_t min_count) {
    const double dt = paths.dt();
    if (h < dt * (1.0 - 1e-9) || h > 10.0 * dt * (1.0 + 1e-9))
        throw std::invalid_argument("forward_drift: h must lie in [dt, 10*dt]");
    const std::size_t ti = paths.time_index(t);
    const std::size_t th = paths.time_index(t + h);
    const std::size_t t2h = paths.time_index(t + 2.0 * h);
    const auto members = adaptive_bin(paths, ti, x_bin, min_count, "forward_drift");
    // Richardson over (h, 2h): per-path 2*(dx_h/h) - dx_2h/(2h) keeps the
    // standard error exact for the extrapolated statistic.
    RunningStats stats;
    for (std::size_t p : members) {
        const double x0 = paths.position(p, ti);
        const double dh = (paths.position(p, th) - x0) / h;
        const double d2h = (paths.position(p, t2h) - x0) / (2.0 * h);
        stats.add(2.0 * dh - d2h);
    }
    return stats.finish();
}

McEstimate estimate_quadratic_variation(const PathSet& paths, double x_bin, double t, double h,
                                        std::size_t min_count) {
    const double dt = paths.dt();
    if (h < dt * (1.0 - 1e-9) || h > 10.0 * dt * (1.0 + 1e-9))
        throw std::invalid_argument("quadratic_variation: h must lie in [dt, 10*dt]");
    const std::size_t ti = paths.time_index(t);
    const std::size_t th = paths.time_index(t + h);
    const std::size_t t2h = paths.time_index(t + 2.0 * h);
    const auto members = adaptive_bin(paths, ti, x_bin, min_count, "quadratic_variation");
    RunningStats stats;
    for (std::size_t p : members) {
        const double x0 = paths.position(p, ti);
        const double qh = (paths.position(p, th) - x0) * (paths.position(p, th) - x0) / h;
        const double q2h =
            (paths.position(p, t2h) - x0) * (paths.position(p, t2h) - x0) / (2.0 * h);
        stats.add(2.0 * qh - q2h);
    }
    return stats.finish();
}

McEstimate estimate_conditional_velocity(const PathSet& paths, const EstimatorWindow& window,
                                         double x, double y, double t, std::size_t min_count) {
    const std::size_t t_before = paths.time_index(t - window.delta1);
    const std::size_t t_after = paths.time_index(t + window.delta2);
    const std::size_t t_lo = paths.time_index(t - 0.5 * window.epsilon);
    const std::size_t t_hi = paths.time_index(t + 0.5 * window.epsilon);
    if (t_lo == t_hi) throw std::invalid_argument("conditional_velocity: epsilon below lattice step");

    const double sigma = std::max(sample_stddev(paths, t_before), 1e-12);
    double width = 0.1 * sigma;
    std::vector<std::size_t> members;
    for (int attempt = 0; attempt < 16; ++attempt) {
        members.clear();
        for (std::size_t p = 0; p < paths.n_paths(); ++p) {
            if (std::abs(paths.position(p, t_before) - x) <= 0.5 * width &&
                std::abs(paths.position(p, t_after) - y) <= 0.5 * width) {
                members.push_back(p);
            }
        }
        if (members.size() >= min_count) break;
        width *= 1.5;
        if (width > sigma) break;
    }
    if (members.size() < std::max<std::size_t>(min_count, 1))
        throw EmptyBinError("conditional_velocity: empty joint bin");

    RunningStats stats;
    for (std::size_t p : members) {
        const double w = (paths.position(p, t_hi) - paths.position(p, t_lo)) /
                         (paths.times()[t_hi] - paths.times()[t_lo]);
        stats.add(w);
    }
    return stats.finish();
}

McEstimate mc_ordered_expectation(const PathSet& paths, std::span<const ObservableAt> sequence,
                                  const EstimatorWindow& window) {
    if (sequence.empty()) throw std::invalid_argument("ordered_expectation: empty sequence");
    for (std::size_t i = 1; i < sequence.size(); ++i) {
        const double gap = sequence[i].time - sequence[i - 1].time;
        if (!(gap > 0.0)) throw std::invalid_argument("ordered_expectation: times must ascend");
        if (window.epsilon / gap > 0.1 + 1e-12)
            throw std::invalid_argument("ordered_expectation: epsilon too large for spacing");
    }

    struct Plan {
        Observable kind;
        std::size_t i_lo = 0, i_hi = 0, i_mid = 0;
        double denom = 1.0;
    };
    std::vector<Plan> plan;
    plan.reserve(sequence.size());
    for (const auto& obs : sequence) {
        Plan pl;
        pl.kind = obs.kind;
        switch (obs.kind) {
            case Observable::Position:
                pl.i_mid = paths.time_index(obs.time);
                break;
            case Observable::Velocity: {
                pl.i_lo = paths.time_index(obs.time - 0.5 * window.epsilon);
                pl.i_hi = paths.time_index(obs.time + 0.5 * window.epsilon);
                pl.denom = paths.times()[pl.i_hi] - paths.times()[pl.i_lo];
                break;
            }
            case Observable::Acceleration: {
                pl.i_lo = paths.time_index(obs.time - window.epsilon);
                pl.i_hi = paths.time_index(obs.time + window.epsilon);
                pl.i_mid = paths.time_index(obs.time);
                const double e = 0.5 * (paths.times()[pl.i_hi] - paths.times()[pl.i_lo]);
                pl.denom = e * e;
                break;
            }
        }
        plan.push_back(pl);
    }

    RunningStats stats;
    for (std::size_t p = 0; p < paths.n_paths(); ++p) {
        double prod = 1.0;
        for (const auto& pl : plan) {
            double v = 0.0;
            switch (pl.kind) {
                case Observable::Position:
                    v = paths.position(p, pl.i_mid);
                    break;
                case Observable::Velocity:
                    v = (paths.position(p, pl.i_hi) - paths.position(p, pl.i_lo)) / pl.denom;
                    break;
                case Observable::Acceleration:
                    v = (paths.position(p, pl.i_hi) + paths.position(p, pl.i_lo) -
                         2.0 * paths.position(p, pl.i_mid)) / pl.denom;
                    break;
            }
            prod *= v;
        }
        stats.add(prod);
    }
    return stats.finish();
}

}  // namespace markovdiff::sde
