#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "zetalab/errors.hpp"

namespace zetalab {

// Splits the primes according to an exact rational ratio a/b > 1 with
// gcd(a,b) = 1. The induced shift step is h = 2*pi / log(a/b), the removed
// set P_p is the set of primes dividing a*b, and the multiplicative semigroup
// N_m consists of the integers coprime to a*b.
struct PrimePartition {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    double h = 0.0;
    std::vector<std::uint64_t> removed_primes;           // P_p, increasing
    std::map<std::uint64_t, std::int64_t> ratio_exponents; // p -> e_p with a/b = prod p^{e_p}

    bool in_removed(std::uint64_t p) const;

    // p prime and not in P_p
    bool in_kept(std::uint64_t p) const { return !in_removed(p); }

    // k in N_m  <=>  gcd(k, a*b) = 1
    bool in_semigroup(std::uint64_t k) const;
};

// Errors: a <= b, b < 1, or gcd(a,b) != 1.
PrimePartition prime_partition(std::uint64_t a, std::uint64_t b);

} // namespace zetalab
