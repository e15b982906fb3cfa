#include "zetalab/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zetalab/counter_rng.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/parallel.hpp"
#include "zetalab/primes.hpp"
#include "zetalab/shift_stream.hpp"
#include "zetalab/truncation.hpp"

namespace zetalab {

namespace {

std::string fmt_cplx(cplx z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

} // namespace

DistributionSample shift_orbit_sample(const ZetaInstance& inst, cplx s0, double h,
                                      std::uint64_t N, int threads) {
    DistributionSample out;
    out.values = stream_instance_shifts(inst, ShiftGrid{s0, h, N + 1}, threads);
    for (std::uint64_t k = 0; k < out.values.size(); ++k)
        if (!finite(out.values[k]))
            throw overflow_error("shift_orbit_sample: non-finite value at k=" + std::to_string(k));
    std::ostringstream os;
    os << "shift_orbit(s0=" << fmt_cplx(s0) << ", h=";
    os.precision(17);
    os << h << ", N=" << N << ")";
    out.provenance = os.str();
    return out;
}

DistributionSample haar_twisted_sample(const ZetaInstance& inst, cplx s0, std::uint64_t count,
                                       std::uint64_t seed, std::uint64_t trunc_n, double sigma1,
                                       int threads) {
    if (count < 1) throw domain_error("haar_twisted_sample: count must be >= 1");

    double amax = 1.0;
    if (inst.kind() == ZetaInstance::Kind::periodic_dirichlet)
        for (cplx v : inst.chi().values()) amax = std::max(amax, std::abs(v));
    std::uint64_t M = weight_cutoff(trunc_n, sigma1, amax);

    // base terms a_h(k) v1(k,n) k^{-s0} are sample-independent; each draw only
    // contributes its multiplicative phase field
    auto spf = smallest_factor_table(static_cast<std::uint32_t>(M));
    std::vector<cplx> base(M + 1, cplx{0.0, 0.0});
    for (std::uint64_t k = 1; k <= M; ++k) {
        cplx a = inst.partial_coefficient(k);
        if (a == cplx{0.0, 0.0}) continue;
        base[k] = a * weight_v1(static_cast<double>(k), static_cast<double>(trunc_n), sigma1) *
                  pow_neg(static_cast<double>(k), s0);
    }

    constexpr std::uint64_t TAG_PRIME = 0x70;
    DistributionSample out;
    out.values.assign(count, cplx{0.0, 0.0});
    parallel_for_index(count, threads, [&](std::size_t i) {
        std::uint64_t sample_seed = mix_key(seed, i);
        std::vector<cplx> w(M + 1, cplx{1.0, 0.0});
        KahanCSum acc;
        acc.add(base[1]);
        for (std::uint64_t k = 2; k <= M; ++k) {
            std::uint64_t p = spf[k];
            w[k] = (k == p) ? random_phase(sample_seed, mix_key(TAG_PRIME, p)) : w[k / p] * w[p];
            if (base[k] != cplx{0.0, 0.0}) acc.add(base[k] * w[k]);
        }
        out.values[i] = acc.value();
    });

    std::ostringstream os;
    os.precision(17);
    os << "haar_twisted(s0=" << fmt_cplx(s0) << ", count=" << count << ", seed=" << seed
       << ", n=" << trunc_n << ", sigma1=" << sigma1 << ", cutoff=" << M << ")";
    out.provenance = os.str();
    return out;
}

namespace {

std::vector<cplx> thin(const std::vector<cplx>& v, std::size_t cap, std::size_t& used) {
    if (cap == 0 || v.size() <= cap) {
        used = v.size();
        return v;
    }
    std::size_t stride = (v.size() + cap - 1) / cap;
    std::vector<cplx> out;
    for (std::size_t i = 0; i < v.size(); i += stride) out.push_back(v[i]);
    used = out.size();
    return out;
}

double mean_cross_distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    KahanSum acc;
    for (cplx x : a)
        for (cplx y : b) acc.add(std::abs(x - y));
    return acc.value() / (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        // step past every element tied at x before reading the gap, so ties
        // shared by both samples contribute nothing
        double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] == x) ++i;
        while (j < b.size() && b[j] == x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

} // namespace

DistributionComparison distribution_compare(const DistributionSample& a,
                                            const DistributionSample& b,
                                            std::size_t max_points) {
    if (a.values.empty() || b.values.empty())
        throw domain_error("distribution_compare: empty sample");

    DistributionComparison cmp{};
    std::vector<cplx> ta = thin(a.values, max_points, cmp.used_a);
    std::vector<cplx> tb = thin(b.values, max_points, cmp.used_b);
    cmp.energy = 2.0 * mean_cross_distance(ta, tb) - mean_cross_distance(ta, ta) -
                 mean_cross_distance(tb, tb);

    std::vector<double> ar, ai, br, bi;
    ar.reserve(a.values.size());
    ai.reserve(a.values.size());
    for (cplx z : a.values) { ar.push_back(z.real()); ai.push_back(z.imag()); }
    br.reserve(b.values.size());
    bi.reserve(b.values.size());
    for (cplx z : b.values) { br.push_back(z.real()); bi.push_back(z.imag()); }
    cmp.ks_re = ks_statistic(std::move(ar), std::move(br));
    cmp.ks_im = ks_statistic(std::move(ai), std::move(bi));
    return cmp;
}

} // namespace zetalab
