#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "zetalab/numeric.hpp"
#include "zetalab/prime_partition.hpp"

namespace zetalab {

// Exponent data of one torus character: integer exponent k_p per prime and,
// per alpha-slot, integer exponent l_m per shifted-integer coordinate.
struct IndexVector {
    std::map<std::uint64_t, std::int64_t> prime_indices;
    std::vector<std::map<std::uint64_t, std::int64_t>> integer_indices;

    bool is_zero() const;
};

struct PhaseInfo {
    double theta;  // h * (sum k_p log p + sum_j sum_m l_m log(m + alpha_j))
    double margin; // |e^{-i theta} - 1| = 2 |sin(theta/2)|
};

PhaseInfo phase_theta(const IndexVector& idx, double h, std::span<const double> alphas);

struct DegeneracyCheck {
    bool exact;      // decision provable in integer arithmetic
    bool degenerate; // theta in 2 pi Z
    double margin;
};

// Degeneracy means prod p^{k_p} equals an integer power of a/b (possible only
// when the index touches removed primes alone and no integer coordinates).
// The zero index is exactly degenerate. With a partition and a pure-prime
// index the question is settled exactly on exponent vectors; otherwise the
// floating margin decides.
DegeneracyCheck check_degeneracy(const IndexVector& idx,
                                 const std::optional<PrimePartition>& partition, double h,
                                 std::span<const double> alphas);

// g_N = (N+1)^{-1} sum_{k=0..N} e^{-i k theta}, summed term by term.
cplx weyl_sum_direct(const IndexVector& idx, double h, std::span<const double> alphas,
                     std::uint64_t N);

// Geometric closed form (N+1)^{-1} (1 - e^{-i(N+1)theta}) / (1 - e^{-i theta}).
// Throws degeneracy_error when the exact check fires or the margin is < 1e-12.
cplx weyl_sum_closed(const IndexVector& idx, double h, std::span<const double> alphas,
                     std::uint64_t N, const std::optional<PrimePartition>& partition = {});

// |g_N| <= 2 / ((N+1) margin) for nondegenerate indices.
inline double weyl_decay_bound(double margin, std::uint64_t N) {
    return 2.0 / (static_cast<double>(N + 1) * margin);
}

// r-tuple alias; the evaluators above already accept any number of slots.
inline cplx weyl_sum_multi(const IndexVector& idx, double h, std::span<const double> alphas,
                           std::uint64_t N) {
    return weyl_sum_direct(idx, h, alphas, N);
}

} // namespace zetalab
