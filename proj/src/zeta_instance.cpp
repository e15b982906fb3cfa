#include "zetalab/zeta_instance.hpp"

#include <cmath>
#include <string>

#include "zetalab/hurwitz.hpp"

namespace zetalab {

ZetaInstance::ZetaInstance(Kind k, std::optional<PeriodicSequence> chi,
                           std::optional<PrimePartition> part)
    : kind_(k), chi_(std::move(chi)), partition_(std::move(part)) {}

ZetaInstance ZetaInstance::riemann(std::optional<PrimePartition> partition) {
    return ZetaInstance(Kind::riemann, std::nullopt, std::move(partition));
}

ZetaInstance ZetaInstance::periodic_dirichlet(PeriodicSequence chi,
                                              std::optional<PrimePartition> partition) {
    return ZetaInstance(Kind::periodic_dirichlet, std::move(chi), std::move(partition));
}

const PeriodicSequence& ZetaInstance::chi() const {
    if (!chi_) throw domain_error("zeta instance: no coefficient sequence attached");
    return *chi_;
}

cplx ZetaInstance::coefficient(std::uint64_t n) const {
    if (n == 0) throw domain_error("zeta instance: coefficients start at n = 1");
    if (kind_ == Kind::riemann) return 1.0;
    return chi_->at((n - 1) % chi_->period());
}

cplx ZetaInstance::partial_coefficient(std::uint64_t n) const {
    if (partition_ && !partition_->in_semigroup(n)) return 0.0;
    return coefficient(n);
}

cplx ZetaInstance::local_root(std::uint64_t p) const {
    return coefficient(p);
}

cplx ZetaInstance::residue_at_one() const {
    if (kind_ == Kind::riemann) return 1.0;
    return chi_->residue();
}

EulerProductSpec ZetaInstance::to_spec() const {
    if (kind_ == Kind::riemann) return EulerProductSpec::riemann();
    if (chi_->period() == 1) {
        EulerProductSpec spec;
        spec.default_factors = {{chi_->values()[0], 1}};
        spec.sigma_star = 0.5;
        return spec;
    }
    throw unsupported_instance_error(
        "zeta instance: periodic coefficients with q > 1 have prime-dependent local factors; "
        "no finite factor table exists");
}

double ZetaInstance::coefficient_second_moment(double sigma) const {
    if (!(sigma > sigma_star()))
        throw convergence_domain_error("coefficient_second_moment: sigma must exceed sigma_star");
    double two_sigma = 2.0 * sigma;

    // sum_n |a(n)|^2 n^{-2 sigma}; |a|^2 is completely multiplicative, so the
    // partition restriction factors out as prod_{p removed} (1 - |a(p)|^2 p^{-2 sigma}).
    double base;
    if (kind_ == Kind::riemann) {
        base = hurwitz_zeta(cplx{two_sigma, 0.0}, 1.0, 1e-14).real();
    } else {
        double q = static_cast<double>(chi_->period());
        KahanSum acc;
        for (std::size_t l = 0; l < chi_->period(); ++l) {
            double w = std::norm(chi_->values()[l]);
            if (w == 0.0) continue;
            acc.add(w * hurwitz_zeta(cplx{two_sigma, 0.0}, (static_cast<double>(l) + 1.0) / q, 1e-14).real());
        }
        base = acc.value() * std::pow(q, -two_sigma);
    }
    if (partition_) {
        for (std::uint64_t p : partition_->removed_primes)
            base *= 1.0 - std::norm(coefficient(p)) * std::pow(static_cast<double>(p), -two_sigma);
    }
    return base;
}

cplx phi_strip_eval(const ZetaInstance& inst, cplx s, double tol) {
    if (!(s.real() > 0.5))
        throw domain_error("phi_strip_eval: declared continuation covers sigma > 1/2 only");
    if (!(tol >= 1e-14)) throw domain_error("phi_strip_eval: tol must be >= 1e-14");

    cplx res = inst.residue_at_one();
    if (std::abs(s - 1.0) < 1e-12 && std::abs(res) > 1e-15)
        throw pole_error("phi_strip_eval: pole at s = 1");

    cplx base;
    if (inst.kind() == ZetaInstance::Kind::riemann) {
        base = hurwitz_zeta(s, 1.0, tol);
    } else {
        // L(s, chi) = sum_{m>=0} chi(m+1) (m+1)^{-s} = zeta(s, 1; chi)
        base = periodic_hurwitz_zeta(s, 1.0, inst.chi(), tol);
    }

    if (inst.partition()) {
        for (std::uint64_t p : inst.partition()->removed_primes)
            base *= 1.0 - inst.local_root(p) * pow_neg(static_cast<double>(p), s);
    }
    return base;
}

} // namespace zetalab
