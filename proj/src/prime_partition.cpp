#include "zetalab/prime_partition.hpp"

#include <algorithm>
#include <cmath>

#include "zetalab/numeric.hpp"
#include "zetalab/primes.hpp"

namespace zetalab {

bool PrimePartition::in_removed(std::uint64_t p) const {
    return std::binary_search(removed_primes.begin(), removed_primes.end(), p);
}

bool PrimePartition::in_semigroup(std::uint64_t k) const {
    if (k == 0) return false;
    return gcd_u64(k, a * b) == 1;
}

PrimePartition prime_partition(std::uint64_t a, std::uint64_t b) {
    if (b < 1) throw domain_error("prime_partition: b must be >= 1");
    if (a <= b) throw domain_error("prime_partition: need a > b for a ratio > 1");
    if (gcd_u64(a, b) != 1)
        throw domain_error("prime_partition: a and b must be coprime (degenerate ratio)");

    PrimePartition part;
    part.a = a;
    part.b = b;
    part.h = TWO_PI / (std::log(static_cast<double>(a)) - std::log(static_cast<double>(b)));

    // gcd(a,b)=1, so each prime divides exactly one of a, b and its exponent
    // in a/b is nonzero.
    for (const auto& [p, e] : factorize(a)) part.ratio_exponents[p] += e;
    for (const auto& [p, e] : factorize(b)) part.ratio_exponents[p] -= e;
    for (const auto& [p, e] : part.ratio_exponents) {
        (void)e;
        part.removed_primes.push_back(p);
    }
    std::sort(part.removed_primes.begin(), part.removed_primes.end());
    return part;
}

} // namespace zetalab
