#pragma once

#include <cstdint>
#include <optional>

#include "zetalab/numeric.hpp"
#include "zetalab/periodic_sequence.hpp"
#include "zetalab/torus_point.hpp"
#include "zetalab/zeta_instance.hpp"

namespace zetalab {

// Smoothing weights of the weighted approximants:
//   v1(m, n)        = exp(-(m/n)^{sigma1})
//   v2(m, n, alpha) = exp(-((m+alpha)/(n+alpha))^{sigma1})
// sigma1 must exceed 1/2.

struct TruncationParams {
    std::uint64_t n = 0;
    double sigma1 = 1.0;
};

double weight_v1(double m, double n, double sigma1);
double weight_v2(double m, double n, double alpha, double sigma1);

// Largest index kept: beyond it the weighted tail sum (with coefficients up
// to `amax` in modulus) stays below 1e-12.
std::uint64_t weight_cutoff(std::uint64_t n, double sigma1, double amax);

// phi_{h,n}(s) = sum_{k in semigroup} a(k) v1(k, n) k^{-s}
cplx weighted_phi_truncation(const ZetaInstance& inst, cplx s, const TruncationParams& tp);

// zeta_n(s, alpha; B) = sum_{m>=0} b_m v2(m, n, alpha) (m+alpha)^{-s}
cplx weighted_hurwitz_truncation(double alpha, const PeriodicSequence& B, cplx s,
                                 const TruncationParams& tp);

// Twisted series sum a(k) omega(k) k^{-s} over the semigroup. With `tp` the
// weighted form above; without it the plain series, which requires sigma > 1
// (cutoff picked from the absolute tail bound, deterministic in the inputs).
cplx twisted_phi_series(const ZetaInstance& inst, cplx s, const TorusPoint& omega,
                        const std::optional<TruncationParams>& tp, double tol);

// Twisted periodic Hurwitz sum b_m omega_j(m) (m+alpha)^{-s}; slot selects
// which integer coordinate family of omega applies.
cplx twisted_hurwitz_series(double alpha, const PeriodicSequence& B, cplx s,
                            const TorusPoint& omega, std::size_t slot,
                            const std::optional<TruncationParams>& tp, double tol);

} // namespace zetalab
