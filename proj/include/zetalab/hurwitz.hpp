#pragma once

#include <array>

#include "zetalab/errors.hpp"
#include "zetalab/numeric.hpp"
#include "zetalab/periodic_sequence.hpp"

namespace zetalab {

struct HurwitzResult {
    cplx value;
    double remainder;   // bound on the truncated Euler-Maclaurin tail
    int leading_terms;  // N in the split sum_{m<N} + tail(N+alpha)
};

// Hurwitz zeta  zeta(s, alpha) = sum_{m>=0} (m+alpha)^{-s}, continued to the
// half-plane sigma > 0 by Euler-Maclaurin with a fixed-order correction stack.
// Preconditions: sigma > 0, alpha in (0,1], tol >= 1e-14, |s-1| >= 1e-12.
HurwitzResult hurwitz_zeta_full(cplx s, double alpha, double tol);

cplx hurwitz_zeta(cplx s, double alpha, double tol);

// zeta(s, alpha; B) = sum_{m>=0} b_m (m+alpha)^{-s} via the period-q split
//   q^{-s} sum_{l<q} b_l zeta(s, (l+alpha)/q).
// Entire when the period mean vanishes; then the value at s = 1 is the limit
//   q^{-1} sum_{l<q} b_l * (-digamma((l+alpha)/q)),
// which is what evaluations within 1e-12 of s = 1 return.
cplx periodic_hurwitz_zeta(cplx s, double alpha, const PeriodicSequence& B, double tol);

// Residue of zeta(s, alpha; B) at s = 1 (the period mean).
cplx periodic_residue(const PeriodicSequence& B);

double digamma(double x);

namespace detail {

// sum_{n>=0} (n+X)^{-s} by the asymptotic Euler-Maclaurin expansion; valid
// once X >~ max(10, |Im s|). remainder receives a bound on the dropped terms.
cplx em_tail(cplx s, double X, double* remainder);

inline constexpr int EM_ORDER = 12;

// B_{2j}/(2j)! for j = 1..EM_ORDER+1 (the extra entry drives the remainder bound)
extern const std::array<double, EM_ORDER + 1> EM_COEFF;

} // namespace detail

} // namespace zetalab
