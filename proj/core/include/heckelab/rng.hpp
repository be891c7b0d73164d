#pragma once

#include <cstdint>

namespace heckelab {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Counter-based stream: the (seed, index) pair fully determines the draws,
/// so work split across any number of workers reproduces the same values.
struct CounterRng {
    std::uint64_t state;

    CounterRng(std::uint64_t seed, std::uint64_t index)
        : state(seed ^ (0xD1B54A32D192ED03ull + index * 0x9E3779B97F4A7C15ull)) {
        splitmix64(state);
    }

    std::uint64_t next() { return splitmix64(state); }

    /// Uniform draw in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace heckelab
