#pragma once

#include <cstdint>
#include <random>

namespace qpr {

/// Seeded 64-bit Mersenne Twister with a portable [0, 1) double, so traces are
/// reproducible across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// 53 random mantissa bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Per-run seed for run `index` of a batch.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) { return master ^ index; }

}  // namespace qpr
