#include "zetalab/euler_product.hpp"

#include <cmath>
#include <string>

#include "zetalab/primes.hpp"

namespace zetalab {

const std::vector<LocalFactor>& EulerProductSpec::factors_at(std::uint64_t p) const {
    auto it = overrides.find(p);
    return it == overrides.end() ? default_factors : it->second;
}

namespace {

void check_factor_set(const std::vector<LocalFactor>& fs, std::uint64_t p, const EulerProductSpec& spec) {
    double pd = static_cast<double>(p);
    if (static_cast<double>(fs.size()) > spec.c1 * std::pow(pd, spec.growth_alpha) + 1e-9)
        throw domain_error("euler spec: factor count at p=" + std::to_string(p) +
                           " exceeds c1 * p^growth_alpha");
    double root_cap = std::pow(pd, spec.growth_beta) + 1e-9;
    for (const auto& f : fs) {
        if (f.exponent < 1) throw domain_error("euler spec: factor exponent must be >= 1");
        if (std::abs(f.root) > root_cap)
            throw domain_error("euler spec: |root| at p=" + std::to_string(p) +
                               " exceeds p^growth_beta");
    }
}

} // namespace

void EulerProductSpec::validate() const {
    if (c1 <= 0.0) throw domain_error("euler spec: c1 must be positive");
    check_factor_set(default_factors, 2, *this);
    for (const auto& [p, fs] : overrides) {
        if (!is_prime(p)) throw domain_error("euler spec: override key " + std::to_string(p) + " is not prime");
        check_factor_set(fs, p, *this);
    }
}

EulerProductSpec EulerProductSpec::riemann() {
    EulerProductSpec spec;
    spec.default_factors = {{cplx{1.0, 0.0}, 1}};
    spec.sigma_star = 0.5;
    return spec;
}

EulerProductSpec EulerProductSpec::divisor(int degree) {
    if (degree < 1) throw domain_error("divisor spec: degree must be >= 1");
    EulerProductSpec spec;
    spec.default_factors.assign(static_cast<std::size_t>(degree), LocalFactor{cplx{1.0, 0.0}, 1});
    spec.c1 = static_cast<double>(degree);
    return spec;
}

std::vector<cplx> expand_dirichlet_coefficients(const EulerProductSpec& spec,
                                                const std::optional<PrimePartition>& partition,
                                                std::uint64_t K) {
    spec.validate();
    if (K < 1) throw domain_error("expand_dirichlet_coefficients: K must be >= 1");
    if (K > (1ULL << 31)) throw domain_error("expand_dirichlet_coefficients: K too large");

    auto spf = smallest_factor_table(static_cast<std::uint32_t>(K));

    // local power series at each prime: L_p[e] = coefficient of p^{-se} in
    // prod_j (1 - a_j x^{f_j})^{-1}, built with the in-place recurrence
    // S[i] += a * S[i - f].
    std::map<std::uint64_t, std::vector<cplx>> local;
    for (std::uint64_t p = 2; p <= K; ++p) {
        if (spf[p] != p) continue; // not prime
        std::size_t emax = 0;
        for (std::uint64_t pw = p; pw <= K; pw *= p) {
            ++emax;
            if (pw > K / p) break;
        }
        std::vector<cplx> L(emax + 1, cplx{0.0, 0.0});
        L[0] = 1.0;
        if (!partition || partition->in_kept(p)) {
            for (const auto& f : spec.factors_at(p)) {
                for (std::size_t i = static_cast<std::size_t>(f.exponent); i <= emax; ++i)
                    L[i] += f.root * L[i - static_cast<std::size_t>(f.exponent)];
            }
        }
        local.emplace(p, std::move(L));
    }

    double shift = spec.shift();
    std::vector<cplx> c(K, cplx{0.0, 0.0});
    c[0] = 1.0; // c_1
    std::vector<cplx> unshifted(K + 1, cplx{0.0, 0.0});
    unshifted[1] = 1.0;
    for (std::uint64_t k = 2; k <= K; ++k) {
        std::uint64_t p = spf[k];
        std::uint64_t rest = k;
        std::size_t e = 0;
        while (rest % p == 0) { rest /= p; ++e; }
        unshifted[k] = unshifted[rest] * local.at(p)[e];
        cplx v = unshifted[k];
        if (shift != 0.0) v *= std::pow(static_cast<double>(k), -shift);
        if (!finite(v))
            throw overflow_error("expand_dirichlet_coefficients: coefficient at k=" + std::to_string(k) +
                                 " is not finite");
        c[k - 1] = v;
    }
    return c;
}

ProductValue euler_product_eval(const EulerProductSpec& spec,
                                const std::optional<PrimePartition>& partition, cplx s,
                                std::uint64_t cutoff) {
    spec.validate();
    if (!(s.real() > 1.0))
        throw convergence_domain_error("euler_product_eval: sigma must exceed 1 (shifted normalization)");
    if (cutoff < 2) throw domain_error("euler_product_eval: cutoff must be >= 2");

    cplx s_eff = s + spec.shift();
    cplx value = 1.0;
    for (std::uint64_t p : primes_up_to(cutoff)) {
        if (partition && partition->in_removed(p)) continue;
        for (const auto& f : spec.factors_at(p)) {
            cplx den = 1.0 - f.root * pow_neg(static_cast<double>(p), s_eff * static_cast<double>(f.exponent));
            if (std::abs(den) < 1e-300)
                throw singular_factor_error("euler_product_eval: factor vanishes at p=" + std::to_string(p));
            value /= den;
        }
    }
    if (!finite(value)) throw overflow_error("euler_product_eval: product is not finite");

    // |log of dropped tail| <= sum_{p>X} g(p) * 2|a| p^{-sigma_eff f}
    //                       <= 2 c1 sum_{n>X} n^{-sigma}  (shift absorbs the growth exponents)
    double sigma = s.real();
    double X = static_cast<double>(cutoff);
    double lam = 2.0 * spec.c1 * (std::pow(X, 1.0 - sigma) / (sigma - 1.0) + std::pow(X, -sigma));
    double tail = std::abs(value) * std::expm1(lam);
    return {value, tail};
}

double steuding_kappa(const EulerProductSpec& spec, std::uint64_t x) {
    spec.validate();
    if (x < 2) throw domain_error("steuding_kappa: x must be >= 2");
    auto ps = primes_up_to(x);
    if (ps.empty()) throw domain_error("steuding_kappa: no primes below x");
    KahanSum acc;
    for (std::uint64_t p : ps) {
        cplx a = 0.0;
        for (const auto& f : spec.factors_at(p))
            if (f.exponent == 1) a += f.root;
        acc.add(std::norm(a));
    }
    return acc.value() / static_cast<double>(ps.size());
}

} // namespace zetalab
