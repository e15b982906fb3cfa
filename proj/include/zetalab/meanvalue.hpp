#pragma once

#include <cstdint>
#include <optional>

#include "zetalab/zeta_instance.hpp"

namespace zetalab {

struct MeanSquare {
    double statistic;
    std::optional<double> reference; // sum |a(n)|^2 n^{-2 sigma0} over the semigroup
    std::uint64_t samples;           // function evaluations entering the statistic
};

// (N+1)^{-1} sum_{k=0..N} |phi_h(sigma0 + i k h)|^2
MeanSquare mean_square_discrete(const ZetaInstance& inst, double sigma0, double h,
                                std::uint64_t N, int threads);

// T^{-1} integral_0^T |phi_h(sigma0 + i t)|^2 dt by the trapezoid rule on the
// given step (T is snapped to a whole number of steps).
MeanSquare mean_square_continuous(const ZetaInstance& inst, double sigma0, double T, double step,
                                  int threads);

} // namespace zetalab
