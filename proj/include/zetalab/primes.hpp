#pragma once

#include <cstdint>
#include <vector>

namespace zetalab {

// Primes up to and including `limit`, increasing.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

std::uint64_t prime_pi(std::uint64_t x);

bool is_prime(std::uint64_t n);

struct PrimePower {
    std::uint64_t p;
    int e;
};

// Prime factorization by trial division, increasing p. Fine for the sizes
// handled here (indices, moduli, series cutoffs).
std::vector<PrimePower> factorize(std::uint64_t n);

// Smallest-prime-factor table for 0..limit (entries 0,1 unused). Lets callers
// walk multiplicative structure in O(log n) per integer.
std::vector<std::uint32_t> smallest_factor_table(std::uint32_t limit);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

} // namespace zetalab
