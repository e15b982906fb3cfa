#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zetalab/numeric.hpp"
#include "zetalab/zeta_instance.hpp"

namespace zetalab {

struct DistributionSample {
    std::vector<cplx> values;
    std::string provenance; // full recipe: kind, s0, seed/h, counts, truncation
};

// Values phi_h(s0 + i k h), k = 0..N.
DistributionSample shift_orbit_sample(const ZetaInstance& inst, cplx s0, double h,
                                      std::uint64_t N, int threads);

// `count` draws of the weighted twisted series at s0 under Haar-random phases
// (truncation level n, weight exponent sigma1). Counter-based randomness makes
// sample i a pure function of (seed, i) whatever the schedule.
DistributionSample haar_twisted_sample(const ZetaInstance& inst, cplx s0, std::uint64_t count,
                                       std::uint64_t seed, std::uint64_t trunc_n, double sigma1,
                                       int threads);

struct DistributionComparison {
    double energy;      // energy distance estimate in the plane
    double ks_re;       // KS statistic, real marginals
    double ks_im;       // KS statistic, imaginary marginals
    std::size_t used_a; // points entering the energy estimate after thinning
    std::size_t used_b;
};

// HEURISTIC weak-convergence diagnostic, not a test with size guarantees.
// Energy terms use stride thinning down to max_points (0 = no cap); the KS
// marginals always use the full samples.
DistributionComparison distribution_compare(const DistributionSample& a,
                                            const DistributionSample& b,
                                            std::size_t max_points = 4096);

} // namespace zetalab
