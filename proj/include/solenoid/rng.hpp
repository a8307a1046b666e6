#pragma once

#include <cstdint>

namespace solenoid {

/// splitmix64: tiny deterministic generator used for reproducible sampling.
/// All sampling in the library and CLI goes through this so runs are
/// bit-identical for a fixed seed regardless of thread count.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, m).
    uint64_t next_below(uint64_t m) { return next() % m; }
};

/// Decorrelated per-sample stream, independent of iteration order.
inline SplitMix64 sample_stream(uint64_t seed, uint64_t index) {
    SplitMix64 mix(seed ^ (0xd1342543de82ef95ull * (index + 1)));
    mix.next();
    return mix;
}

}  // namespace solenoid
