#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zetalab/fspace.hpp"
#include "zetalab/periodic_sequence.hpp"
#include "zetalab/zeta_instance.hpp"

namespace zetalab {

struct ScanMode {
    bool continuous = false;
    double T = 0.0;        // continuous span
    double tau_step = 0.0; // continuous sampling step
};

struct PhiSlot {
    CompactRegion region;
    TargetFunction target;
    double nonvanish_margin = 1e-9;
    std::optional<double> epsilon; // overrides ScanConfig::epsilon
};

struct HurwitzSlot {
    double alpha;
    PeriodicSequence B;
    CompactRegion region;
    TargetFunction target;
    std::optional<double> epsilon;
    std::string alpha_note; // provenance of the declared alpha (e.g. "1/pi")
};

struct ScanConfig {
    ZetaInstance instance;
    double h = 0.0;
    PhiSlot phi{};
    std::vector<HurwitzSlot> slots{}; // r >= 1
    double epsilon = 0.01;
    std::uint64_t N = 100000;
    double grid_delta = 0.01;
    ScanMode mode{};
    int threads = 0;
};

struct ScanTelemetry {
    std::uint64_t evaluations = 0; // streamed function values
    double seconds = 0.0;
    double evals_per_second = 0.0;
};

struct ScanResult {
    std::uint64_t trials = 0; // shifts examined (incl. skipped)
    std::uint64_t hits = 0;
    double density = 0.0;
    std::vector<std::uint64_t> hit_indices;
    std::vector<double> d1;              // sup distance on K_1 per shift (nan if skipped)
    std::vector<std::vector<double>> d2; // [slot][shift]
    std::vector<std::uint64_t> skipped;  // pole-adjacent shifts
    ScanTelemetry telemetry;
    bool continuous = false;
    double tau_step = 0.0; // shift k sits at tau = k * tau_step when continuous
};

// Walks k = 0..N (or tau = 0, step, ..., <= T), evaluates every slot on its
// grid via shift streams, and counts the shifts where every slot's sup
// distance falls strictly below its epsilon. Self targets resolve to the
// k = 0 values of the corresponding streams. Shifts placing a grid point
// within 1e-9 of a pole are skipped and reported, not counted as hits.
// Deterministic: output is independent of the thread count.
ScanResult discrete_scan(const ScanConfig& cfg);

// Continuous variant; density is hits * tau_step / T.
ScanResult continuous_scan(const ScanConfig& cfg);

// Wilson score interval for a hit density at the given confidence.
std::pair<double, double> density_interval(std::uint64_t hits, std::uint64_t trials,
                                           double confidence);

// Inverse standard normal CDF (Acklam's rational fit plus one erfc-based
// refinement; |error| < 1e-15 over (0,1)).
double probit(double p);

} // namespace zetalab
