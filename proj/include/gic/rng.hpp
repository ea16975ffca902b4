#pragma once

#include <cstdint>
#include <random>

namespace gic {

/// Deterministic uniform doubles built from raw mt19937_64 words, so streams
/// do not depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(raw() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    /// Uniform in (0, hi].
    double positive(double hi) { return hi * (1.0 - unit()); }

private:
    std::mt19937_64 engine_;
};

} // namespace gic
