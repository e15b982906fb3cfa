#pragma once

#include <cstdint>

#include "zetalab/numeric.hpp"

namespace zetalab {

// Counter-based generator: every draw is a pure function of (seed, key),
// so parallel sampling is schedule-independent and any single coordinate can
// be regenerated in isolation.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Mix an ordered tuple of words into one key. Composition (not xor of raw
// words) so that permuted tuples land on different streams.
inline std::uint64_t mix_key(std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(a) ^ (0x9e3779b97f4a7c15ULL + b));
}

inline std::uint64_t mix_key(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix_key(mix_key(a, b), c);
}

// Uniform double in [0,1) with 53 random bits.
inline double uniform01(std::uint64_t seed, std::uint64_t key) {
    return static_cast<double>(mix_key(seed, key) >> 11) * 0x1.0p-53;
}

// Uniform phase e^{2 pi i U}.
inline cplx random_phase(std::uint64_t seed, std::uint64_t key) {
    return cis(TWO_PI * uniform01(seed, key));
}

} // namespace zetalab
