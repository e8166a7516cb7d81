#pragma once

#include <cstdint>

#include "tdl/config.hpp"

namespace tdl {

// Deterministic 64-bit splittable generator (splitmix64). Every sampled mode
// in the library and CLI draws from this, so runs are reproducible per seed.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-enough value in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    SplitMix64 split() { return SplitMix64(next() ^ 0xd1b54a32d192ed03ULL); }
};

inline Config random_config(int n, SplitMix64& rng) {
    Config c(n);
    for (int v = 0; v < n; ++v) c.set(v, (rng.next() >> 13) & 1u);
    return c;
}

}  // namespace tdl
