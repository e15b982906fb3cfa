#include "zetalab/scan.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "zetalab/errors.hpp"
#include "zetalab/parallel.hpp"
#include "zetalab/shift_stream.hpp"

namespace zetalab {

namespace {

struct StreamJob {
    bool is_phi;
    std::size_t slot;  // hurwitz slot index
    std::size_t point; // grid point index
    cplx s0;
};

std::uint64_t shift_count(const ScanConfig& cfg, double step) {
    if (!cfg.mode.continuous) return cfg.N + 1;
    if (!(cfg.mode.T > 0.0) || !(cfg.mode.tau_step > 0.0))
        throw domain_error("scan: continuous mode needs positive T and tau_step");
    // the 1e-9 slack keeps T = N*h from losing its last sample to rounding
    return static_cast<std::uint64_t>(std::floor(cfg.mode.T / step + 1e-9)) + 1;
}

void validate(const ScanConfig& cfg) {
    if (!(cfg.h > 0.0) && !cfg.mode.continuous) throw domain_error("scan: h must be positive");
    if (cfg.slots.empty()) throw domain_error("scan: need at least one Hurwitz slot");
    if (!(cfg.epsilon > 0.0)) throw domain_error("scan: epsilon must be positive");
    for (const auto& slot : cfg.slots) {
        if (slot.epsilon && !(*slot.epsilon > 0.0))
            throw domain_error("scan: slot epsilon must be positive");
        if (!(slot.alpha > 0.0) || slot.alpha > 1.0)
            throw domain_error("scan: slot alpha must lie in (0,1]");
        slot.region.validate();
        if (slot.region.ambient.sigma_lo < 0.5 - 1e-15 || slot.region.ambient.sigma_hi > 1.0 + 1e-15)
            throw domain_error("scan: Hurwitz slot ambient must sit inside the critical strip");
    }
    if (cfg.phi.epsilon && !(*cfg.phi.epsilon > 0.0))
        throw domain_error("scan: phi epsilon must be positive");
    cfg.phi.region.validate();
    if (cfg.phi.region.ambient.sigma_lo < cfg.instance.sigma_star() - 1e-15 ||
        cfg.phi.region.ambient.sigma_hi > 1.0 + 1e-15)
        throw domain_error("scan: phi ambient must sit inside (sigma_star, 1)");
}

ScanResult run_scan(const ScanConfig& cfg) {
    validate(cfg);
    double step = cfg.mode.continuous ? cfg.mode.tau_step : cfg.h;
    std::uint64_t count = shift_count(cfg, step);
    std::size_t r = cfg.slots.size();

    SamplingGrid phi_grid = sample_compact(cfg.phi.region, cfg.grid_delta);
    std::vector<SamplingGrid> slot_grids;
    slot_grids.reserve(r);
    for (const auto& slot : cfg.slots) slot_grids.push_back(sample_compact(slot.region, cfg.grid_delta));

    std::vector<StreamJob> jobs;
    for (std::size_t g = 0; g < phi_grid.points.size(); ++g)
        jobs.push_back({true, 0, g, phi_grid.points[g]});
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t g = 0; g < slot_grids[j].points.size(); ++g)
            jobs.push_back({false, j, g, slot_grids[j].points[g]});

    auto t_begin = std::chrono::steady_clock::now();
    std::vector<std::vector<cplx>> stream_values(jobs.size());
    parallel_for_index(jobs.size(), cfg.threads, [&](std::size_t i) {
        const StreamJob& job = jobs[i];
        ShiftGrid grid{job.s0, step, count};
        stream_values[i] =
            job.is_phi ? stream_instance_shifts(cfg.instance, grid, 1)
                       : stream_periodic_hurwitz_shifts(cfg.slots[job.slot].alpha,
                                                        cfg.slots[job.slot].B, grid, 1);
    });
    auto t_end = std::chrono::steady_clock::now();

    // regroup per slot for the distance pass
    std::vector<const std::vector<cplx>*> phi_streams(phi_grid.points.size());
    std::vector<std::vector<const std::vector<cplx>*>> slot_streams(r);
    for (std::size_t j = 0; j < r; ++j) slot_streams[j].resize(slot_grids[j].points.size());
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (jobs[i].is_phi)
            phi_streams[jobs[i].point] = &stream_values[i];
        else
            slot_streams[jobs[i].slot][jobs[i].point] = &stream_values[i];
    }

    // targets; a self target takes the k = 0 column of its own streams
    std::vector<cplx> f1;
    if (cfg.phi.target.kind == TargetFunction::Kind::self_shift) {
        f1.reserve(phi_grid.points.size());
        for (auto* sv : phi_streams) f1.push_back((*sv)[0]);
    } else {
        f1 = target_values_on(cfg.phi.target, phi_grid);
    }
    {
        double lo = std::numeric_limits<double>::infinity();
        for (cplx v : f1) lo = std::min(lo, std::abs(v));
        if (cfg.phi.target.kind == TargetFunction::Kind::exp_polynomial) {
            // structurally nonvanishing
        } else if (!(lo > cfg.phi.nonvanish_margin)) {
            throw target_error("scan: phi target is not certified nonvanishing on K_1");
        }
    }
    std::vector<std::vector<cplx>> f2(r);
    for (std::size_t j = 0; j < r; ++j) {
        if (cfg.slots[j].target.kind == TargetFunction::Kind::self_shift) {
            f2[j].reserve(slot_grids[j].points.size());
            for (auto* sv : slot_streams[j]) f2[j].push_back((*sv)[0]);
        } else {
            f2[j] = target_values_on(cfg.slots[j].target, slot_grids[j]);
        }
    }

    // pole-adjacent shifts: some grid point lands within 1e-9 of s = 1 - i k step
    bool phi_pole = std::abs(cfg.instance.residue_at_one()) > 1e-15;
    std::vector<bool> slot_pole(r);
    for (std::size_t j = 0; j < r; ++j) {
        const auto& b = cfg.slots[j].B;
        double bsum = 0.0;
        for (cplx v : b.values()) bsum += std::abs(v);
        slot_pole[j] = std::abs(b.residue()) > 1e-15 * (bsum + 1.0);
    }
    auto near_pole = [&](const SamplingGrid& grid, double tshift) {
        for (cplx p : grid.points)
            if (std::abs(p + cplx{0.0, tshift} - 1.0) < 1e-9) return true;
        return false;
    };

    double eps1 = cfg.phi.epsilon.value_or(cfg.epsilon);
    std::vector<double> eps2(r);
    for (std::size_t j = 0; j < r; ++j) eps2[j] = cfg.slots[j].epsilon.value_or(cfg.epsilon);

    ScanResult res;
    res.trials = count;
    res.continuous = cfg.mode.continuous;
    res.tau_step = cfg.mode.continuous ? step : 0.0;
    res.d1.assign(count, std::numeric_limits<double>::quiet_NaN());
    res.d2.assign(r, std::vector<double>(count, std::numeric_limits<double>::quiet_NaN()));

    for (std::uint64_t k = 0; k < count; ++k) {
        double tshift = step * static_cast<double>(k);
        bool skip = (phi_pole && near_pole(phi_grid, tshift));
        for (std::size_t j = 0; j < r && !skip; ++j)
            skip = slot_pole[j] && near_pole(slot_grids[j], tshift);
        if (skip) {
            res.skipped.push_back(k);
            continue;
        }

        double d1 = 0.0;
        for (std::size_t g = 0; g < phi_grid.points.size(); ++g) {
            cplx v = (*phi_streams[g])[k];
            if (!finite(v))
                throw overflow_error("scan: evaluation failed at shift k=" + std::to_string(k));
            d1 = std::max(d1, std::abs(v - f1[g]));
        }
        res.d1[k] = d1;
        bool hit = d1 < eps1;
        for (std::size_t j = 0; j < r; ++j) {
            double dj = 0.0;
            for (std::size_t g = 0; g < slot_grids[j].points.size(); ++g) {
                cplx v = (*slot_streams[j][g])[k];
                if (!finite(v))
                    throw overflow_error("scan: evaluation failed at shift k=" + std::to_string(k));
                dj = std::max(dj, std::abs(v - f2[j][g]));
            }
            res.d2[j][k] = dj;
            hit = hit && dj < eps2[j];
        }
        if (hit) {
            ++res.hits;
            res.hit_indices.push_back(k);
        }
    }

    if (cfg.mode.continuous)
        res.density = static_cast<double>(res.hits) * step / cfg.mode.T;
    else
        res.density = static_cast<double>(res.hits) / static_cast<double>(count);

    std::size_t grid_total = phi_grid.points.size();
    for (const auto& g : slot_grids) grid_total += g.points.size();
    res.telemetry.evaluations = count * grid_total;
    res.telemetry.seconds = std::chrono::duration<double>(t_end - t_begin).count();
    if (res.telemetry.seconds > 0.0)
        res.telemetry.evals_per_second =
            static_cast<double>(res.telemetry.evaluations) / res.telemetry.seconds;
    return res;
}

} // namespace

ScanResult discrete_scan(const ScanConfig& cfg) {
    if (cfg.mode.continuous) throw domain_error("discrete_scan: config is in continuous mode");
    return run_scan(cfg);
}

ScanResult continuous_scan(const ScanConfig& cfg) {
    if (!cfg.mode.continuous) throw domain_error("continuous_scan: config is in discrete mode");
    return run_scan(cfg);
}

double probit(double p) {
    if (!(p > 0.0) || !(p < 1.0)) throw domain_error("probit: p must lie in (0,1)");

    // Acklam's rational approximation
    static const double A[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double B[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double C[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double D[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double p_low = 0.02425;

    double x;
    if (p < p_low) {
        double q = std::sqrt(-2.0 * std::log(p));
        x = (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5]) /
            ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0);
    } else if (p > 1.0 - p_low) {
        double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5]) /
            ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0);
    } else {
        double q = p - 0.5;
        double rr = q * q;
        x = (((((A[0] * rr + A[1]) * rr + A[2]) * rr + A[3]) * rr + A[4]) * rr + A[5]) * q /
            (((((B[0] * rr + B[1]) * rr + B[2]) * rr + B[3]) * rr + B[4]) * rr + 1.0);
    }
    // one Halley step against the exact CDF
    double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    double u = e * std::sqrt(TWO_PI) * std::exp(0.5 * x * x);
    return x - u / (1.0 + 0.5 * x * u);
}

std::pair<double, double> density_interval(std::uint64_t hits, std::uint64_t trials,
                                           double confidence) {
    if (trials == 0) throw domain_error("density_interval: no trials");
    if (hits > trials) throw domain_error("density_interval: hits exceed trials");
    if (!(confidence > 0.0) || !(confidence < 1.0))
        throw domain_error("density_interval: confidence must lie in (0,1)");

    double n = static_cast<double>(trials);
    double phat = static_cast<double>(hits) / n;
    double z = probit(0.5 + 0.5 * confidence);
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (phat + z2 / (2.0 * n)) / denom;
    double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

} // namespace zetalab
