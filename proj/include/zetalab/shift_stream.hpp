#pragma once

#include <cstdint>
#include <vector>

#include "zetalab/numeric.hpp"
#include "zetalab/periodic_sequence.hpp"
#include "zetalab/zeta_instance.hpp"

namespace zetalab {

// Arithmetic progression of sample points s_k = s0 + i k h, k = 0..count-1.
struct ShiftGrid {
    cplx s0;
    double h = 0.0;
    std::uint64_t count = 0;
};

// Evaluates a Dirichlet-type function on a whole shift grid at once.
//
// Along the progression each leading term obeys
//   (m+x)^{-s_{k+1}} = (m+x)^{-s_k} * (m+x)^{-ih},
// so one complex multiplication per term replaces a fresh exp/log; the
// Euler-Maclaurin tail is recomputed per shift (cheap). This is what makes
// scan-scale workloads (1e4+ evaluations per grid point) feasible.
//
// The k-range is processed in fixed-size blocks, each restarted from scratch
// (freshly exponentiated terms, leading length matched to the block's largest
// |Im s|), and each block sums fixed 8192-term chunks merged in index order.
// Results are therefore bitwise independent of the thread count.
//
// Values are returned raw: a shift landing on a pole produces inf/nan at that
// slot and it is the caller's job to skip or abort.

// phi_h on the grid: base function through its continuation times the
// removed-prime correction factors. Requires Re s0 > 1/2.
std::vector<cplx> stream_instance_shifts(const ZetaInstance& inst, const ShiftGrid& grid,
                                         int threads);

// zeta(s, alpha; B) on the grid. Requires Re s0 > 0.
std::vector<cplx> stream_periodic_hurwitz_shifts(double alpha, const PeriodicSequence& B,
                                                 const ShiftGrid& grid, int threads);

} // namespace zetalab
