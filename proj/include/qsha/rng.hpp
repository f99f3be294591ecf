#pragma once

#include <cstdint>

namespace qsha {

// splitmix64: tiny counter-based generator with bit-stable output across
// platforms. Every stochastic path in the project draws from one of these,
// seeded from (master seed, stream index), so results do not depend on the
// parallel schedule.
struct SplitMix64 {
    std::uint64_t state;

    constexpr explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound). Modulo bias is < 2^-53 for the bounds used here.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }
};

// Derives an independent stream seed from (seed, index).
constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
    return mix.next();
}

} // namespace qsha
