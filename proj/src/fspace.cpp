#include "zetalab/fspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace zetalab {

CompactRegion CompactRegion::rectangle(double sigma_min, double sigma_max, double t_min,
                                       double t_max, AmbientStrip ambient) {
    CompactRegion r;
    r.shape = Shape::rectangle;
    r.sigma_min = sigma_min;
    r.sigma_max = sigma_max;
    r.t_min = t_min;
    r.t_max = t_max;
    r.ambient = ambient;
    r.validate();
    return r;
}

CompactRegion CompactRegion::disk(cplx center, double radius, AmbientStrip ambient) {
    CompactRegion r;
    r.shape = Shape::disk;
    r.center = center;
    r.radius = radius;
    r.ambient = ambient;
    r.validate();
    return r;
}

void CompactRegion::validate() const {
    if (!(ambient.sigma_lo < ambient.sigma_hi) || !(ambient.t_bound > 0.0))
        throw domain_error("compact region: ambient strip is empty");
    if (shape == Shape::rectangle) {
        if (sigma_min > sigma_max || t_min > t_max)
            throw domain_error("compact region: empty rectangle");
        if (!(sigma_min > ambient.sigma_lo) || !(sigma_max < ambient.sigma_hi) ||
            !(t_min > -ambient.t_bound) || !(t_max < ambient.t_bound))
            throw domain_error("compact region: rectangle closure leaves the open strip");
    } else {
        if (radius < 0.0) throw domain_error("compact region: negative radius");
        if (!(center.real() - radius > ambient.sigma_lo) ||
            !(center.real() + radius < ambient.sigma_hi) ||
            !(std::abs(center.imag()) + radius < ambient.t_bound))
            throw domain_error("compact region: disk closure leaves the open strip");
    }
}

bool CompactRegion::contains(cplx s) const {
    if (shape == Shape::rectangle)
        return s.real() >= sigma_min - 1e-15 && s.real() <= sigma_max + 1e-15 &&
               s.imag() >= t_min - 1e-15 && s.imag() <= t_max + 1e-15;
    return std::abs(s - center) <= radius + 1e-12;
}

namespace {

// endpoint-inclusive 1-d lattice with spacing <= delta; the 1e-9 guard keeps
// exact-multiple spans from gaining a step to rounding
std::vector<double> axis_points(double lo, double hi, double delta) {
    if (hi <= lo) return {lo};
    auto n = static_cast<std::size_t>(std::ceil((hi - lo) / delta - 1e-9)) + 1;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return out;
}

void dedupe(std::vector<cplx>& pts, double eps) {
    std::sort(pts.begin(), pts.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    std::vector<cplx> out;
    for (cplx p : pts)
        if (out.empty() || std::abs(p - out.back()) > eps) out.push_back(p);
    pts.swap(out);
}

} // namespace

SamplingGrid sample_compact(const CompactRegion& region, double delta) {
    region.validate();
    if (!(delta > 0.0)) throw domain_error("sample_compact: delta must be positive");

    SamplingGrid grid;
    grid.delta = delta;

    if (region.shape == CompactRegion::Shape::rectangle) {
        for (double sr : axis_points(region.sigma_min, region.sigma_max, delta))
            for (double ti : axis_points(region.t_min, region.t_max, delta))
                grid.points.push_back({sr, ti});
        return grid;
    }

    if (region.radius == 0.0) {
        grid.points = {region.center};
        return grid;
    }
    for (double sr : axis_points(region.center.real() - region.radius,
                                 region.center.real() + region.radius, delta))
        for (double ti : axis_points(region.center.imag() - region.radius,
                                     region.center.imag() + region.radius, delta)) {
            cplx p{sr, ti};
            if (std::abs(p - region.center) <= region.radius + 1e-15) grid.points.push_back(p);
        }
    auto nb = static_cast<std::size_t>(
        std::max(4.0, std::ceil(TWO_PI * region.radius / delta)));
    for (std::size_t i = 0; i < nb; ++i) {
        double phi = TWO_PI * static_cast<double>(i) / static_cast<double>(nb);
        grid.points.push_back(region.center + region.radius * cis(phi));
    }
    dedupe(grid.points, delta * 1e-9);
    return grid;
}

double sup_distance(std::span<const cplx> f_values, std::span<const cplx> g_values) {
    if (f_values.size() != g_values.size())
        throw domain_error("sup_distance: value arrays differ in length");
    if (f_values.empty()) throw domain_error("sup_distance: empty grid");
    double d = 0.0;
    for (std::size_t i = 0; i < f_values.size(); ++i)
        d = std::max(d, std::abs(f_values[i] - g_values[i]));
    return d;
}

double sup_distance(const std::function<cplx(cplx)>& f, const std::function<cplx(cplx)>& g,
                    const SamplingGrid& grid) {
    double d = 0.0;
    for (cplx p : grid.points) d = std::max(d, std::abs(f(p) - g(p)));
    return d;
}

Exhaustion build_exhaustion(const AmbientStrip& ambient, int levels) {
    if (levels < 1) throw domain_error("build_exhaustion: need at least one level");
    if (!(ambient.sigma_lo < ambient.sigma_hi) || !(ambient.t_bound > 0.0))
        throw domain_error("build_exhaustion: ambient strip is empty");

    Exhaustion exh;
    exh.ambient = ambient;
    double w = ambient.sigma_hi - ambient.sigma_lo;
    for (int l = 1; l <= levels; ++l) {
        double inset = 0.5 * w / static_cast<double>(l + 1);
        double t = ambient.t_bound * static_cast<double>(l) / static_cast<double>(l + 1);
        exh.levels.push_back(CompactRegion::rectangle(ambient.sigma_lo + inset,
                                                      ambient.sigma_hi - inset, -t, t, ambient));
    }
    return exh;
}

RhoResult rho_metric(const std::function<cplx(cplx)>& f, const std::function<cplx(cplx)>& g,
                     const Exhaustion& exh, double delta) {
    if (exh.levels.empty()) throw domain_error("rho_metric: empty exhaustion");
    double value = 0.0;
    double weight = 1.0;
    for (const auto& level : exh.levels) {
        weight *= 0.5;
        double d = sup_distance(f, g, sample_compact(level, delta));
        value += weight * d / (1.0 + d);
    }
    return {value, weight}; // dropped levels contribute at most sum_{l>L} 2^{-l} = 2^{-L}
}

cplx eval_target(const TargetFunction& f, cplx s) {
    switch (f.kind) {
        case TargetFunction::Kind::constant:
            if (f.coeffs.empty()) throw target_error("constant target: missing value");
            return f.coeffs[0];
        case TargetFunction::Kind::polynomial:
        case TargetFunction::Kind::exp_polynomial: {
            if (f.coeffs.empty()) throw target_error("polynomial target: missing coefficients");
            cplx acc = 0.0;
            for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) acc = acc * s + *it;
            return f.kind == TargetFunction::Kind::exp_polynomial ? std::exp(acc) : acc;
        }
        case TargetFunction::Kind::sampled: {
            if (f.grid_points.size() != f.values.size())
                throw target_error("sampled target: grid/value length mismatch");
            for (std::size_t i = 0; i < f.grid_points.size(); ++i)
                if (std::abs(f.grid_points[i] - s) <= 1e-12) return f.values[i];
            throw target_error("sampled target: evaluation off its grid");
        }
        case TargetFunction::Kind::self_shift:
            throw target_error("self target: only meaningful inside a scan");
    }
    throw target_error("target: unknown kind");
}

std::vector<cplx> target_values_on(const TargetFunction& f, const SamplingGrid& grid) {
    if (f.kind == TargetFunction::Kind::sampled) {
        // require the exact same grid (fast path and the only sound one)
        if (f.grid_points.size() != grid.points.size())
            throw target_error("sampled target: grid size mismatch");
    }
    std::vector<cplx> out;
    out.reserve(grid.points.size());
    for (cplx p : grid.points) out.push_back(eval_target(f, p));
    return out;
}

void certify_nonvanishing(const TargetFunction& f, const SamplingGrid& grid, double margin) {
    if (margin < 0.0) throw domain_error("certify_nonvanishing: negative margin");
    if (f.kind == TargetFunction::Kind::exp_polynomial) return; // exp never vanishes
    if (f.kind == TargetFunction::Kind::self_shift)
        throw target_error("self target: certify against resolved values instead");
    double lo = std::numeric_limits<double>::infinity();
    for (cplx v : target_values_on(f, grid)) lo = std::min(lo, std::abs(v));
    if (!(lo > margin))
        throw target_error("target vanishes within margin " + std::to_string(margin) +
                           " on its region (grid minimum " + std::to_string(lo) + ")");
}

} // namespace zetalab
