#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace markovdiff {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Per-stream RNG: stream i of a master seed is independent of stream j, so
/// path generation is deterministic for a given (seed, path index) no matter
/// how paths are distributed over threads. Normal deviates use Box-Muller on
/// explicit 53-bit uniforms, so results do not depend on the standard
/// library's distribution implementations.
class SubstreamRng {
public:
    SubstreamRng(std::uint64_t master_seed, std::uint64_t stream) {
        std::uint64_t s = master_seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
        const std::uint64_t a = splitmix64(s);
        const std::uint64_t b = splitmix64(s);
        engine_.seed(a ^ (b << 1));
    }

    double uniform01() {
        // in (0, 1]
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 engine_;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

}  // namespace markovdiff
