#include "zetalab/hurwitz.hpp"

#include <array>
#include <cmath>

namespace zetalab {

namespace detail {

namespace {

// B_2, B_4, ..., B_26 as exact rationals
constexpr std::array<double, EM_ORDER + 1> BERNOULLI_NUM = {
    1.0, -1.0, 1.0, -1.0, 5.0, -691.0, 7.0, -3617.0, 43867.0, -174611.0, 854513.0, -236364091.0, 8553103.0};
constexpr std::array<double, EM_ORDER + 1> BERNOULLI_DEN = {
    6.0, 30.0, 42.0, 30.0, 66.0, 2730.0, 6.0, 510.0, 798.0, 330.0, 138.0, 2730.0, 6.0};

std::array<double, EM_ORDER + 1> make_coeff() {
    std::array<double, EM_ORDER + 1> c{};
    double fact = 1.0; // (2j)!
    for (int j = 1; j <= EM_ORDER + 1; ++j) {
        fact *= (2.0 * j - 1.0) * (2.0 * j);
        c[j - 1] = BERNOULLI_NUM[j - 1] / BERNOULLI_DEN[j - 1] / fact;
    }
    return c;
}

} // namespace

const std::array<double, EM_ORDER + 1> EM_COEFF = make_coeff();

cplx em_tail(cplx s, double X, double* remainder) {
    // X^{1-s}/(s-1) + X^{-s}/2 + sum_j B_{2j}/(2j)! (s)_{2j-1} X^{-s-2j+1}
    cplx xs = pow_neg(X, s); // X^{-s}
    cplx value = xs * X / (s - 1.0) + 0.5 * xs;

    cplx poch = s;           // (s)_{2j-1}
    cplx pw = xs / X;        // X^{-s-2j+1}
    double inv2 = 1.0 / (X * X);
    for (int j = 1; j <= EM_ORDER; ++j) {
        value += EM_COEFF[j - 1] * poch * pw;
        poch *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
        pw *= inv2;
    }
    if (remainder) {
        // first omitted term, inflated by the standard |s+2q+1|/(sigma+2q+1) factor
        double q2 = 2.0 * (EM_ORDER + 1);
        double infl = std::abs(s + (q2 - 1.0)) / (s.real() + q2 - 1.0);
        *remainder = std::abs(EM_COEFF[EM_ORDER]) * std::abs(poch) * std::abs(pw) * infl;
    }
    return value;
}

} // namespace detail

HurwitzResult hurwitz_zeta_full(cplx s, double alpha, double tol) {
    if (!(alpha > 0.0) || alpha > 1.0) throw domain_error("hurwitz_zeta: alpha must lie in (0,1]");
    if (!(s.real() > 0.0)) throw domain_error("hurwitz_zeta: sigma must be positive");
    if (!(tol >= 1e-14)) throw domain_error("hurwitz_zeta: tol must be >= 1e-14");
    if (std::abs(s - 1.0) < 1e-12) throw pole_error("hurwitz_zeta: pole at s = 1");

    long n = std::max(10L, static_cast<long>(std::ceil(std::abs(s.imag()))));
    for (;;) {
        double rem = 0.0;
        cplx tail = detail::em_tail(s, static_cast<double>(n) + alpha, &rem);
        if (rem <= 0.5 * tol || n >= (1L << 26)) {
            KahanCSum lead;
            for (long m = 0; m < n; ++m) lead.add(pow_neg(static_cast<double>(m) + alpha, s));
            return {lead.value() + tail, rem, static_cast<int>(n)};
        }
        n *= 2;
    }
}

cplx hurwitz_zeta(cplx s, double alpha, double tol) {
    return hurwitz_zeta_full(s, alpha, tol).value;
}

cplx periodic_residue(const PeriodicSequence& B) {
    return B.residue();
}

double digamma(double x) {
    if (!(x > 0.0)) throw domain_error("digamma: x must be positive");
    double acc = 0.0;
    while (x < 12.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    // psi(x) ~ ln x - 1/(2x) - sum_j B_{2j}/(2j x^{2j})
    double inv2 = 1.0 / (x * x);
    double pw = inv2;
    double corr = 0.0;
    double fact = 1.0; // (2j)! running, to undo the factorial baked into EM_COEFF
    for (int j = 1; j <= detail::EM_ORDER; ++j) {
        fact *= (2.0 * j - 1.0) * (2.0 * j);
        double b2j = detail::EM_COEFF[j - 1] * fact; // B_{2j}/(2j)! * (2j)! = B_{2j}
        corr += b2j / (2.0 * j) * pw;
        pw *= inv2;
    }
    return acc + std::log(x) - 0.5 / x - corr;
}

cplx periodic_hurwitz_zeta(cplx s, double alpha, const PeriodicSequence& B, double tol) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw domain_error("periodic_hurwitz_zeta: alpha must lie in (0,1]");
    if (!(s.real() > 0.0)) throw domain_error("periodic_hurwitz_zeta: sigma must be positive");
    if (!(tol >= 1e-14)) throw domain_error("periodic_hurwitz_zeta: tol must be >= 1e-14");

    const auto& b = B.values();
    double q = static_cast<double>(B.period());

    double bsum = 0.0;
    for (cplx v : b) bsum += std::abs(v);
    cplx res = B.residue();
    bool has_pole = std::abs(res) > 1e-15 * (bsum + 1.0);

    if (std::abs(s - 1.0) < 1e-12) {
        if (has_pole) throw pole_error("periodic_hurwitz_zeta: pole at s = 1 (nonzero period mean)");
        // cancelling 1/(s-1) terms leave q^{-1} sum b_l * (-psi((l+alpha)/q))
        cplx lim = 0.0;
        for (std::size_t l = 0; l < b.size(); ++l)
            lim += b[l] * (-digamma((static_cast<double>(l) + alpha) / q));
        return lim / q;
    }

    double tol_inner = std::max(1e-14, tol * std::pow(q, s.real()) / (bsum + 1.0));
    KahanCSum sum;
    for (std::size_t l = 0; l < b.size(); ++l) {
        if (b[l] == cplx{0.0, 0.0}) continue;
        sum.add(b[l] * hurwitz_zeta(s, (static_cast<double>(l) + alpha) / q, tol_inner));
    }
    return pow_neg(q, s) * sum.value();
}

} // namespace zetalab
