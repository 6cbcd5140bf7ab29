#pragma once

#include <cstdint>
#include <random>

namespace wfcsc {

// mt19937_64 output is pinned by the standard, but uniform_int_distribution
// is not; this bounded draw keeps seeded runs byte-identical across standard
// libraries.
inline std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % n;
    }
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Independent, reproducible seed for the idx-th run under one master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t idx) {
    return splitmix64(master ^ splitmix64(idx + 1));
}

}  // namespace wfcsc
