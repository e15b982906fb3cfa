#pragma once

#include <optional>
#include <vector>

#include "zetalab/euler_product.hpp"
#include "zetalab/numeric.hpp"
#include "zetalab/periodic_sequence.hpp"
#include "zetalab/prime_partition.hpp"

namespace zetalab {

// A concrete zeta object with a declared analytic continuation, so the strip
// 1/2 < sigma <= 1 is reachable. Two kinds:
//   riemann            a(n) = 1
//   periodic_dirichlet a(n) = chi(n), chi periodic with period q (completely
//                      multiplicative by declaration; minimal period enforced)
// An attached partition removes the Euler factors at the primes dividing a*b,
// i.e. evaluates the partial product over the kept primes times the declared
// continuation.
class ZetaInstance {
public:
    enum class Kind { riemann, periodic_dirichlet };

    static ZetaInstance riemann(std::optional<PrimePartition> partition = std::nullopt);
    static ZetaInstance periodic_dirichlet(PeriodicSequence chi,
                                           std::optional<PrimePartition> partition = std::nullopt);

    Kind kind() const { return kind_; }
    const std::optional<PrimePartition>& partition() const { return partition_; }
    const PeriodicSequence& chi() const;

    // a(n) before any partition restriction
    cplx coefficient(std::uint64_t n) const;

    // a(n) with coefficients outside the partition semigroup zeroed
    cplx partial_coefficient(std::uint64_t n) const;

    // roots of the exponent-1 local factor at p (before partition removal)
    cplx local_root(std::uint64_t p) const;

    // residue of the base function at s = 1 (pre-partition; the partition
    // correction factor is finite and nonzero there for ratio != 1)
    cplx residue_at_one() const;

    double sigma_star() const { return 0.5; }

    EulerProductSpec to_spec() const; // errors for periodic_dirichlet with q > 1: not table-form

    // reference value sum_{n in semigroup} |a(n)|^2 n^{-2 sigma}, sigma > sigma_star
    double coefficient_second_moment(double sigma) const;

private:
    ZetaInstance(Kind k, std::optional<PeriodicSequence> chi, std::optional<PrimePartition> part);

    Kind kind_;
    std::optional<PeriodicSequence> chi_;
    std::optional<PrimePartition> partition_;
};

// Evaluate the (partial) function in the strip sigma > 1/2 through the
// declared continuation:
//   riemann:            zeta(s)   * prod_{p removed} (1 - p^{-s})
//   periodic_dirichlet: L(s, chi) * prod_{p removed} (1 - chi(p) p^{-s})
// Errors: domain_error for sigma <= 1/2, pole_error near s = 1 when the
// residue is nonzero.
cplx phi_strip_eval(const ZetaInstance& inst, cplx s, double tol);

} // namespace zetalab
