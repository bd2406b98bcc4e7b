#pragma once

#include <cstdint>
#include <random>

namespace mdlseg {

// Random streams are std::mt19937_64, whose output sequence is fixed by
// the C++ standard, so seeded runs reproduce across platforms. Bounded
// draws below avoid std::uniform_int_distribution, which is not
// portable across standard libraries.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Stream splitting: trial t of base seed s runs on its own generator
// seeded with splitmix64(s + (t+1) * golden gamma).
inline std::uint64_t trialSeed(std::uint64_t base, std::uint64_t trial) {
    return splitmix64(base + (trial + 1) * 0x9E3779B97F4A7C15ull);
}

// Unbiased draw from [0, n) by rejection on the raw 64-bit output.
inline std::uint64_t uniformBelow(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t maxValue = ~std::uint64_t{0};
    const std::uint64_t zone = maxValue - maxValue % n; // n * floor(max/n)
    for (;;) {
        const std::uint64_t r = rng();
        if (r < zone) return r % n;
    }
}

} // namespace mdlseg
