#include "zetalab/truncation.hpp"

#include <cmath>

#include "zetalab/errors.hpp"
#include "zetalab/primes.hpp"

namespace zetalab {

namespace {

void check_params(const TruncationParams& tp) {
    if (tp.n < 1) throw domain_error("weighted truncation: n must be >= 1");
    if (!(tp.sigma1 > 0.5)) throw domain_error("weighted truncation: sigma1 must exceed 1/2");
}

// multiplicative phase table omega(k), k <= limit, via smallest-factor walk
std::vector<cplx> multiplicative_table(const TorusPoint& omega, std::uint64_t limit) {
    auto spf = smallest_factor_table(static_cast<std::uint32_t>(limit));
    std::vector<cplx> w(limit + 1, cplx{1.0, 0.0});
    for (std::uint64_t k = 2; k <= limit; ++k) {
        std::uint64_t p = spf[k];
        w[k] = w[k / p] * omega.prime_phase(p);
    }
    return w;
}

// plain-series cutoff: amax * (M^{1-sigma}/(sigma-1) + M^{-sigma}) < tol
std::uint64_t plain_cutoff(double sigma, double amax, double tol) {
    std::uint64_t M = 64;
    while (amax * (std::pow(static_cast<double>(M), 1.0 - sigma) / (sigma - 1.0) +
                   std::pow(static_cast<double>(M), -sigma)) >= tol) {
        if (M > (1ULL << 34)) throw domain_error("twisted series: cutoff exceeds supported range");
        M *= 2;
    }
    return M;
}

} // namespace

double weight_v1(double m, double n, double sigma1) {
    return std::exp(-std::pow(m / n, sigma1));
}

double weight_v2(double m, double n, double alpha, double sigma1) {
    return std::exp(-std::pow((m + alpha) / (n + alpha), sigma1));
}

std::uint64_t weight_cutoff(std::uint64_t n, double sigma1, double amax) {
    double nn = static_cast<double>(n);
    double target = std::log(8e12 * nn * std::max(amax, 1.0));
    return static_cast<std::uint64_t>(std::ceil(nn * std::pow(target, 1.0 / sigma1))) + 1;
}

cplx weighted_phi_truncation(const ZetaInstance& inst, cplx s, const TruncationParams& tp) {
    check_params(tp);
    double amax = 1.0;
    if (inst.kind() == ZetaInstance::Kind::periodic_dirichlet)
        for (cplx v : inst.chi().values()) amax = std::max(amax, std::abs(v));
    std::uint64_t M = weight_cutoff(tp.n, tp.sigma1, amax);

    KahanCSum acc;
    for (std::uint64_t k = 1; k <= M; ++k) {
        cplx a = inst.partial_coefficient(k);
        if (a == cplx{0.0, 0.0}) continue;
        acc.add(a * weight_v1(static_cast<double>(k), static_cast<double>(tp.n), tp.sigma1) *
                pow_neg(static_cast<double>(k), s));
    }
    return acc.value();
}

cplx weighted_hurwitz_truncation(double alpha, const PeriodicSequence& B, cplx s,
                                 const TruncationParams& tp) {
    check_params(tp);
    if (!(alpha > 0.0) || alpha > 1.0)
        throw domain_error("weighted truncation: alpha must lie in (0,1]");
    double amax = 0.0;
    for (cplx v : B.values()) amax = std::max(amax, std::abs(v));
    std::uint64_t M = weight_cutoff(tp.n, tp.sigma1, amax);

    KahanCSum acc;
    for (std::uint64_t m = 0; m <= M; ++m) {
        cplx b = B.at(m);
        if (b == cplx{0.0, 0.0}) continue;
        acc.add(b * weight_v2(static_cast<double>(m), static_cast<double>(tp.n), alpha, tp.sigma1) *
                pow_neg(static_cast<double>(m) + alpha, s));
    }
    return acc.value();
}

cplx twisted_phi_series(const ZetaInstance& inst, cplx s, const TorusPoint& omega,
                        const std::optional<TruncationParams>& tp, double tol) {
    omega.validate_unit_modulus();
    double amax = 1.0;
    if (inst.kind() == ZetaInstance::Kind::periodic_dirichlet)
        for (cplx v : inst.chi().values()) amax = std::max(amax, std::abs(v));

    std::uint64_t M;
    if (tp) {
        check_params(*tp);
        M = weight_cutoff(tp->n, tp->sigma1, amax);
    } else {
        if (!(s.real() > 1.0))
            throw convergence_domain_error("twisted series: sigma must exceed 1 without a weight");
        M = plain_cutoff(s.real(), amax, std::max(tol, 1e-14));
    }

    auto w = multiplicative_table(omega, M);
    KahanCSum acc;
    for (std::uint64_t k = 1; k <= M; ++k) {
        cplx a = inst.partial_coefficient(k);
        if (a == cplx{0.0, 0.0}) continue;
        cplx term = a * w[k] * pow_neg(static_cast<double>(k), s);
        if (tp) term *= weight_v1(static_cast<double>(k), static_cast<double>(tp->n), tp->sigma1);
        acc.add(term);
    }
    return acc.value();
}

cplx twisted_hurwitz_series(double alpha, const PeriodicSequence& B, cplx s,
                            const TorusPoint& omega, std::size_t slot,
                            const std::optional<TruncationParams>& tp, double tol) {
    omega.validate_unit_modulus();
    if (!(alpha > 0.0) || alpha > 1.0)
        throw domain_error("twisted series: alpha must lie in (0,1]");
    double amax = 0.0;
    for (cplx v : B.values()) amax = std::max(amax, std::abs(v));

    std::uint64_t M;
    if (tp) {
        check_params(*tp);
        M = weight_cutoff(tp->n, tp->sigma1, amax);
    } else {
        if (!(s.real() > 1.0))
            throw convergence_domain_error("twisted series: sigma must exceed 1 without a weight");
        M = plain_cutoff(s.real(), std::max(amax, 1.0), std::max(tol, 1e-14));
    }

    KahanCSum acc;
    for (std::uint64_t m = 0; m <= M; ++m) {
        cplx b = B.at(m);
        if (b == cplx{0.0, 0.0}) continue;
        cplx term = b * omega.integer_phase(slot, m) * pow_neg(static_cast<double>(m) + alpha, s);
        if (tp)
            term *= weight_v2(static_cast<double>(m), static_cast<double>(tp->n), alpha, tp->sigma1);
        acc.add(term);
    }
    return acc.value();
}

} // namespace zetalab
