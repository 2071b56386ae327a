#pragma once

#include <cstdint>

namespace holo {

// splitmix64: the counter-based hash behind all stochastic sampling.
// Keying jitter and diffuser phases by (seed, indices) keeps results
// independent of thread scheduling.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline uint64_t hash_combine(uint64_t a, uint64_t b) {
    return splitmix64(a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2)));
}

// Uniform double in [0,1) from a 64-bit hash (53 mantissa bits).
inline double hash_to_unit(uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

inline double jitter01(uint64_t seed, uint64_t a, uint64_t b, uint64_t c) {
    return hash_to_unit(splitmix64(hash_combine(hash_combine(seed, a), hash_combine(b, c))));
}

}  // namespace holo
