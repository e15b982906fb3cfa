#pragma once

#include <functional>
#include <span>
#include <vector>

#include "zetalab/errors.hpp"
#include "zetalab/numeric.hpp"

namespace zetalab {

// Open vertical strip sigma_lo < Re s < sigma_hi, |Im s| < t_bound.
struct AmbientStrip {
    double sigma_lo = 0.5;
    double sigma_hi = 1.0;
    double t_bound = 0.0;

    bool contains_open(cplx s) const {
        return s.real() > sigma_lo && s.real() < sigma_hi && std::abs(s.imag()) < t_bound;
    }
};

// Compact subset of an ambient strip: axis-aligned rectangle or closed disk.
// The closure must lie strictly inside the open strip.
struct CompactRegion {
    enum class Shape { rectangle, disk };

    Shape shape = Shape::rectangle;
    double sigma_min = 0.0, sigma_max = 0.0; // rectangle
    double t_min = 0.0, t_max = 0.0;
    cplx center;                             // disk
    double radius = 0.0;
    AmbientStrip ambient;

    static CompactRegion rectangle(double sigma_min, double sigma_max, double t_min,
                                   double t_max, AmbientStrip ambient);
    static CompactRegion disk(cplx center, double radius, AmbientStrip ambient);

    void validate() const;
    bool contains(cplx s) const;
};

struct SamplingGrid {
    std::vector<cplx> points;
    double delta = 0.0;
};

// Finite grid with nearest-neighbor spacing <= delta covering the region:
// a boundary-inclusive lattice (plus, for disks, an arc-spaced boundary ring).
// A radius-0 disk yields the single center point.
SamplingGrid sample_compact(const CompactRegion& region, double delta);

double sup_distance(std::span<const cplx> f_values, std::span<const cplx> g_values);
double sup_distance(const std::function<cplx(cplx)>& f, const std::function<cplx(cplx)>& g,
                    const SamplingGrid& grid);

// Increasing compact rectangles K_1 c K_2 c ... filling the open strip:
// level l is inset by half-width/(l+1) horizontally and reaches +-T*l/(l+1).
struct Exhaustion {
    AmbientStrip ambient;
    std::vector<CompactRegion> levels;
};

Exhaustion build_exhaustion(const AmbientStrip& ambient, int levels = 20);

struct RhoResult {
    double value;
    double tail_bound; // contribution the dropped levels could still add
};

// rho(f, g) = sum_l 2^{-l} d_l / (1 + d_l) with d_l the grid sup-distance on
// level l. Grid discretization makes this a lower proxy of the true metric;
// outputs carry the grid delta so readers can judge the resolution.
RhoResult rho_metric(const std::function<cplx(cplx)>& f, const std::function<cplx(cplx)>& g,
                     const Exhaustion& exh, double delta);

inline double rho_joint(double rho1, double rho2) { return std::max(rho1, rho2); }

// Admissible approximation targets.
//   constant:       f(s) = c
//   polynomial:     f(s) = sum coeffs[i] s^i
//   exp_polynomial: f(s) = exp(sum coeffs[i] s^i), never zero
//   sampled:        values tabulated on a fixed grid; evaluation off-grid errors
//   self_shift:     placeholder resolved inside a scan to the k = 0 stream values
struct TargetFunction {
    enum class Kind { constant, polynomial, exp_polynomial, sampled, self_shift };

    Kind kind = Kind::constant;
    std::vector<cplx> coeffs;       // constant/polynomial/exp_polynomial
    std::vector<cplx> grid_points;  // sampled
    std::vector<cplx> values;       // sampled
};

cplx eval_target(const TargetFunction& f, cplx s);

// Values of f on every grid point (sampled targets must match the grid exactly).
std::vector<cplx> target_values_on(const TargetFunction& f, const SamplingGrid& grid);

// Throws target_error unless min |f| on the grid exceeds `margin`.
// exp_polynomial passes structurally; the zero constant never does.
void certify_nonvanishing(const TargetFunction& f, const SamplingGrid& grid, double margin);

} // namespace zetalab
