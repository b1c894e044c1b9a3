#pragma once

#include <cstdint>

namespace algpencil {

// splitmix64. Chosen over <random> engines because the output stream is
// pinned by the algorithm itself, so seeded results are identical across
// platforms and standard library versions.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform-ish in [lo, hi] via modulo; the tiny bias is irrelevant here,
    // determinism is what matters.
    long long range(long long lo, long long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next() % span);
    }
};

// Independent child stream: used to split one user seed into per-trial
// streams so results do not depend on evaluation order.
inline SplitMix64 child_rng(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed ^ (0xA0761D6478BD642Full * (index + 1)));
    mix.next();
    return mix;
}

}  // namespace algpencil
