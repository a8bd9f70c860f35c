#include "markovdiff/params.hpp"

#include <cmath>
#include <stdexcept>

namespace markovdiff {

ModelParams validate_params(ModelParams raw) {
    auto finite = [](double v) { return std::isfinite(v); };
    if (!finite(raw.m) || !finite(raw.nu) || !finite(raw.lambda) || !finite(raw.c) ||
        !finite(raw.kappa) || !finite(raw.T)) {
        throw std::invalid_argument("params: non-finite input");
    }
    if (raw.m <= 0.0) throw std::invalid_argument("params: m must be positive");
    if (raw.nu <= 0.0) throw std::invalid_argument("params: nu must be positive");
    if (raw.T < 0.0) throw std::invalid_argument("params: T must be nonnegative");
    if (raw.kappa < 0.0) throw std::invalid_argument("params: kappa must be nonnegative");
    if (raw.lambda < 0.5) {
        throw std::invalid_argument("params: lambda < 1/2 yields unphysical stationary states");
    }

    if (raw.lambda == 0.5) {
        raw.branch = ParamBranch::Classical;
        raw.hbar = 0.0;
        raw.beta_mag = std::numeric_limits<double>::infinity();
    } else {
        raw.branch = ParamBranch::Quantum;
        const double root = std::sqrt(2.0 * raw.lambda - 1.0);
        raw.hbar = raw.m * raw.nu * root;
        raw.beta_mag = 1.0 / root;
    }
    raw.mu = raw.kappa > 0.0 ? raw.nu / raw.kappa : std::numeric_limits<double>::infinity();
    return raw;
}

}  // namespace markovdiff
