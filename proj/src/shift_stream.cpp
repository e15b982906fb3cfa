#include "zetalab/shift_stream.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "zetalab/errors.hpp"
#include "zetalab/hurwitz.hpp"
#include "zetalab/parallel.hpp"

namespace zetalab {

namespace {

constexpr std::uint64_t CHUNK = 8192;  // leading terms per summation chunk
constexpr std::uint64_t BLOCK = 8192;  // shifts per restart block
constexpr std::uint64_t WAVE = 8;      // chunks merged per parallel wave

struct SeriesShape {
    std::vector<cplx> w; // one period of coefficients, w[m mod q]
    double x = 1.0;      // offset: terms are w_m (m+x)^{-s}
};

void check_grid(const ShiftGrid& grid, double sigma_floor) {
    if (!(grid.h > 0.0)) throw domain_error("shift stream: h must be positive");
    if (grid.count < 1) throw domain_error("shift stream: count must be >= 1");
    if (!(grid.s0.real() > sigma_floor))
        throw domain_error("shift stream: sigma outside the evaluable half-plane");
}

// One restart block: values[k0 .. k0+len) += leading sums; EM tails added here
// too. `mult` (optional) post-multiplies each shift's value.
void run_block(const SeriesShape& shape, const ShiftGrid& grid, std::uint64_t k0,
               std::uint64_t len, int threads,
               const std::function<cplx(cplx)>& mult, std::vector<cplx>& out) {
    const std::uint64_t q = shape.w.size();
    const double x = shape.x;
    const double h = grid.h;
    const cplx s_block = grid.s0 + cplx{0.0, h * static_cast<double>(k0)};

    double t_lo = std::abs(s_block.imag());
    double t_hi = std::abs(s_block.imag() + h * static_cast<double>(len - 1));
    double t_max = std::max(t_lo, t_hi);
    std::uint64_t n0 = static_cast<std::uint64_t>(std::max(10.0, std::ceil(t_max))) + 2;
    const std::uint64_t M = q * n0;

    const std::uint64_t chunks = (M + CHUNK - 1) / CHUNK;
    std::vector<KahanCSum> acc(len);
    std::vector<std::vector<cplx>> partial(WAVE);

    for (std::uint64_t wave = 0; wave < chunks; wave += WAVE) {
        std::uint64_t in_wave = std::min(WAVE, chunks - wave);
        parallel_for_index(in_wave, threads, [&](std::size_t ci) {
            std::uint64_t c = wave + ci;
            std::uint64_t m_lo = c * CHUNK;
            std::uint64_t m_hi = std::min(M, m_lo + CHUNK);
            std::uint64_t n = m_hi - m_lo;

            // split re/im arrays so the k-loop vectorizes
            std::vector<double> ar(n), ai(n), rr(n), ri(n);
            for (std::uint64_t i = 0; i < n; ++i) {
                double base = static_cast<double>(m_lo + i) + x;
                double lg = std::log(base);
                cplx a = shape.w[(m_lo + i) % q] * std::exp(-s_block * lg);
                cplx r = cis(-h * lg);
                ar[i] = a.real();
                ai[i] = a.imag();
                rr[i] = r.real();
                ri[i] = r.imag();
            }

            auto& ps = partial[ci];
            ps.assign(len, cplx{0.0, 0.0});
            for (std::uint64_t k = 0; k < len; ++k) {
                double sr = 0.0, si = 0.0;
                for (std::uint64_t i = 0; i < n; ++i) {
                    sr += ar[i];
                    si += ai[i];
                    double t = ar[i] * rr[i] - ai[i] * ri[i];
                    ai[i] = ar[i] * ri[i] + ai[i] * rr[i];
                    ar[i] = t;
                }
                ps[k] = {sr, si};
            }
        });
        for (std::uint64_t ci = 0; ci < in_wave; ++ci)
            for (std::uint64_t k = 0; k < len; ++k) acc[k].add(partial[ci][k]);
    }

    // analytic tails: per shift, per residue class l,
    //   sum_{n >= n0} w_l (qn + l + x)^{-s} = w_l q^{-s} em_tail(s, n0 + (l+x)/q)
    for (std::uint64_t k = 0; k < len; ++k) {
        cplx s = s_block + cplx{0.0, h * static_cast<double>(k)};
        cplx tail = 0.0;
        cplx qs = q == 1 ? cplx{1.0, 0.0} : pow_neg(static_cast<double>(q), s);
        for (std::uint64_t l = 0; l < q; ++l) {
            if (shape.w[l] == cplx{0.0, 0.0}) continue;
            tail += shape.w[l] *
                    detail::em_tail(s, static_cast<double>(n0) + (static_cast<double>(l) + x) / static_cast<double>(q),
                                    nullptr);
        }
        cplx v = acc[k].value() + qs * tail;
        if (mult) v *= mult(s);
        out[k0 + k] = v;
    }
}

std::vector<cplx> run_stream(const SeriesShape& shape, const ShiftGrid& grid, int threads,
                             const std::function<cplx(cplx)>& mult) {
    std::vector<cplx> out(grid.count);
    for (std::uint64_t k0 = 0; k0 < grid.count; k0 += BLOCK)
        run_block(shape, grid, k0, std::min(BLOCK, grid.count - k0), threads, mult, out);
    return out;
}

} // namespace

std::vector<cplx> stream_instance_shifts(const ZetaInstance& inst, const ShiftGrid& grid,
                                         int threads) {
    check_grid(grid, 0.5);

    SeriesShape shape;
    shape.x = 1.0;
    if (inst.kind() == ZetaInstance::Kind::riemann)
        shape.w = {cplx{1.0, 0.0}};
    else
        shape.w = inst.chi().values(); // w[m] = chi(m+1)

    std::function<cplx(cplx)> mult;
    if (inst.partition()) {
        const auto removed = inst.partition()->removed_primes;
        std::vector<cplx> roots;
        roots.reserve(removed.size());
        for (std::uint64_t p : removed) roots.push_back(inst.local_root(p));
        mult = [removed, roots](cplx s) {
            cplx f = 1.0;
            for (std::size_t i = 0; i < removed.size(); ++i)
                f *= 1.0 - roots[i] * pow_neg(static_cast<double>(removed[i]), s);
            return f;
        };
    }
    return run_stream(shape, grid, threads, mult);
}

std::vector<cplx> stream_periodic_hurwitz_shifts(double alpha, const PeriodicSequence& B,
                                                 const ShiftGrid& grid, int threads) {
    check_grid(grid, 0.0);
    if (!(alpha > 0.0) || alpha > 1.0)
        throw domain_error("shift stream: alpha must lie in (0,1]");

    SeriesShape shape;
    shape.x = alpha;
    shape.w = B.values();
    return run_stream(shape, grid, threads, nullptr);
}

} // namespace zetalab
