#pragma once

#include "conegauge/types.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

namespace conegauge {

/// Counter-based generator (splitmix64 core). Every (seed, index) pair yields
/// an independent stream, so a sampling loop draws the same values for any
/// thread count and any iteration order.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t index)
        : state_(seed ^ (0x9E3779B97F4A7C15ull * (index + 1))) {
        next_u64();
        next_u64();
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform draw in (0, 1].
    double uniform01() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; pairs are cached.
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        cached_ = r * std::sin(a);
        has_cached_ = true;
        return r * std::cos(a);
    }

    RealVec normal_vec(Eigen::Index dim) {
        RealVec v(dim);
        for (Eigen::Index i = 0; i < dim; ++i) v(i) = normal();
        return v;
    }

private:
    std::uint64_t state_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace conegauge
