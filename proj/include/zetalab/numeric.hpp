#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace zetalab {

using cplx = std::complex<double>;

inline constexpr double PI = 3.14159265358979323846264338327950288;
inline constexpr double TWO_PI = 2.0 * PI;

// e^{i*phi}
inline cplx cis(double phi) {
    return {std::cos(phi), std::sin(phi)};
}

// x^{-s} = exp(-s ln x), x > 0
inline cplx pow_neg(double x, cplx s) {
    return std::exp(-s * std::log(x));
}

inline bool finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Kahan compensated accumulator. Needed because several acceptance tolerances
// (1e-10 on sums of 1e4..1e6 unit-size terms) sit near the naive summation
// error floor.
struct KahanSum {
    double sum = 0.0;
    double c = 0.0;

    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

struct KahanCSum {
    KahanSum re, im;

    void add(cplx z) {
        re.add(z.real());
        im.add(z.imag());
    }
    cplx value() const { return {re.value(), im.value()}; }
};

} // namespace zetalab
