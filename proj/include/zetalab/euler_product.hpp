#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "zetalab/errors.hpp"
#include "zetalab/numeric.hpp"
#include "zetalab/prime_partition.hpp"

namespace zetalab {

// One inverse linear factor (1 - root * p^{-s*exponent})^{-1} of a local
// Euler factor.
struct LocalFactor {
    cplx root;
    int exponent = 1;
};

// Polynomial Euler product data. `default_factors` applies at every prime not
// listed in `overrides`. growth_alpha / growth_beta bound the factor count and
// root size per prime: #factors(p) <= c1 * p^growth_alpha, |root| <= p^growth_beta.
// Series coefficients are reported in the shifted normalization, i.e. for
// phi(s) = phi_tilde(s + growth_alpha + growth_beta), which converges
// absolutely for sigma > 1.
struct EulerProductSpec {
    std::vector<LocalFactor> default_factors;
    std::map<std::uint64_t, std::vector<LocalFactor>> overrides;
    double growth_alpha = 0.0;
    double growth_beta = 0.0;
    double c1 = 1.0;
    std::optional<double> sigma_star; // declared second-moment abscissa

    const std::vector<LocalFactor>& factors_at(std::uint64_t p) const;

    double shift() const { return growth_alpha + growth_beta; }

    // Enforces exponent >= 1 and the growth bounds (defaults checked at p = 2,
    // the binding case; overrides at their own prime). Throws domain_error.
    void validate() const;

    static EulerProductSpec riemann();

    // degree-fold product (1 - p^{-s})^{-degree}; coefficients are the
    // degree-th Dirichlet divisor numbers
    static EulerProductSpec divisor(int degree);
};

// Dirichlet coefficients c_1..c_K of the shifted product, with coefficients at
// indices outside the partition semigroup set to zero when a partition is given.
// Throws overflow_error if a coefficient is not finite.
std::vector<cplx> expand_dirichlet_coefficients(const EulerProductSpec& spec,
                                                const std::optional<PrimePartition>& partition,
                                                std::uint64_t K);

struct ProductValue {
    cplx value;
    double tail; // bound on |true - value| from primes beyond the cutoff
};

// Product over primes p <= cutoff (restricted to kept primes when a partition
// is given) of the shifted local factors at s.
// Errors: convergence_domain_error for sigma <= 1, singular_factor_error if a
// factor vanishes at s.
ProductValue euler_product_eval(const EulerProductSpec& spec,
                                const std::optional<PrimePartition>& partition, cplx s,
                                std::uint64_t cutoff);

// kappa-hat(x) = pi(x)^{-1} sum_{p<=x} |a(p)|^2 where a(p) sums the roots of
// the exponent-1 factors at p.
double steuding_kappa(const EulerProductSpec& spec, std::uint64_t x);

} // namespace zetalab
