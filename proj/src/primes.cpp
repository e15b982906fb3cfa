#include "zetalab/primes.hpp"

#include <numeric>
#include <stdexcept>

namespace zetalab {

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!composite[i]) out.push_back(i);
    return out;
}

std::uint64_t prime_pi(std::uint64_t x) {
    return primes_up_to(x).size();
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::vector<std::uint32_t> smallest_factor_table(std::uint32_t limit) {
    std::vector<std::uint32_t> spf(static_cast<std::size_t>(limit) + 1, 0);
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (spf[i] != 0) continue;
        for (std::uint64_t j = i; j <= limit; j += i)
            if (spf[j] == 0) spf[j] = i;
    }
    return spf;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    return std::gcd(a, b);
}

} // namespace zetalab
