#include "zetalab/weyl.hpp"

#include <cmath>
#include <string>

#include "zetalab/errors.hpp"
#include "zetalab/primes.hpp"

namespace zetalab {

bool IndexVector::is_zero() const {
    for (const auto& [p, k] : prime_indices)
        if (k != 0) { (void)p; return false; }
    for (const auto& slot : integer_indices)
        for (const auto& [m, l] : slot)
            if (l != 0) { (void)m; return false; }
    return true;
}

namespace {

void check_index(const IndexVector& idx, std::span<const double> alphas) {
    for (const auto& [p, k] : idx.prime_indices) {
        (void)k;
        if (!is_prime(p))
            throw domain_error("index vector: key " + std::to_string(p) + " is not prime");
    }
    if (idx.integer_indices.size() > alphas.size())
        throw domain_error("index vector: more integer slots than alphas");
    for (double a : alphas)
        if (!(a > 0.0) || a > 1.0) throw domain_error("index vector: alphas must lie in (0,1]");
}

} // namespace

PhaseInfo phase_theta(const IndexVector& idx, double h, std::span<const double> alphas) {
    if (!(h > 0.0)) throw domain_error("phase_theta: h must be positive");
    check_index(idx, alphas);

    KahanSum acc;
    for (const auto& [p, k] : idx.prime_indices)
        if (k != 0) acc.add(static_cast<double>(k) * std::log(static_cast<double>(p)));
    for (std::size_t j = 0; j < idx.integer_indices.size(); ++j)
        for (const auto& [m, l] : idx.integer_indices[j])
            if (l != 0) acc.add(static_cast<double>(l) * std::log(static_cast<double>(m) + alphas[j]));

    double theta = h * acc.value();
    double margin = 2.0 * std::abs(std::sin(0.5 * theta));
    return {theta, margin};
}

DegeneracyCheck check_degeneracy(const IndexVector& idx,
                                 const std::optional<PrimePartition>& partition, double h,
                                 std::span<const double> alphas) {
    PhaseInfo ph = phase_theta(idx, h, alphas);

    // the zero index needs no arithmetic: theta is an empty sum
    if (idx.is_zero()) return {true, true, ph.margin};

    bool has_integer = false;
    for (const auto& slot : idx.integer_indices)
        for (const auto& [m, l] : slot)
            if (l != 0) { (void)m; has_integer = true; }

    if (!partition || has_integer) {
        // alphas are declared transcendental, so mixed indices have no exact
        // integer certificate; fall back to the floating margin
        return {false, ph.margin < 1e-12, ph.margin};
    }

    // prod p^{k_p} = (a/b)^r for some integer r  <=>  k_p = r e_p on all of P_p
    // (and k_p = 0 elsewhere), by unique factorization.
    bool zero = true;
    for (const auto& [p, k] : idx.prime_indices)
        if (k != 0) { (void)p; zero = false; }
    if (zero) return {true, true, ph.margin}; // r = 0: the trivial character

    for (const auto& [p, k] : idx.prime_indices)
        if (k != 0 && !partition->in_removed(p)) return {true, false, ph.margin};

    std::int64_t r = 0;
    bool have_r = false;
    for (std::uint64_t p : partition->removed_primes) {
        std::int64_t e = partition->ratio_exponents.at(p);
        auto it = idx.prime_indices.find(p);
        std::int64_t k = it == idx.prime_indices.end() ? 0 : it->second;
        if (!have_r) {
            if (k % e != 0) return {true, false, ph.margin};
            r = k / e;
            have_r = true;
        } else if (k != r * e) {
            return {true, false, ph.margin};
        }
    }
    return {true, r != 0, ph.margin};
}

cplx weyl_sum_direct(const IndexVector& idx, double h, std::span<const double> alphas,
                     std::uint64_t N) {
    PhaseInfo ph = phase_theta(idx, h, alphas);
    cplx step = cis(-ph.theta);
    cplx z = 1.0;
    KahanCSum acc;
    for (std::uint64_t k = 0; k <= N; ++k) {
        // resync kills the multiplicative drift of the running power
        if (k % 4096 == 0)
            z = cis(-std::fmod(static_cast<double>(k) * ph.theta, TWO_PI));
        acc.add(z);
        z *= step;
    }
    return acc.value() / static_cast<double>(N + 1);
}

cplx weyl_sum_closed(const IndexVector& idx, double h, std::span<const double> alphas,
                     std::uint64_t N, const std::optional<PrimePartition>& partition) {
    DegeneracyCheck dc = check_degeneracy(idx, partition, h, alphas);
    if (dc.degenerate)
        throw degeneracy_error(dc.exact
                                   ? "weyl_sum_closed: index is exactly degenerate (ratio power)"
                                   : "weyl_sum_closed: phase margin below 1e-12");
    if (dc.margin < 1e-12)
        throw degeneracy_error("weyl_sum_closed: phase margin below 1e-12");

    PhaseInfo ph = phase_theta(idx, h, alphas);
    double full = std::fmod(static_cast<double>(N + 1) * ph.theta, TWO_PI);
    cplx num = 1.0 - cis(-full);
    cplx den = 1.0 - cis(-ph.theta);
    return num / den / static_cast<double>(N + 1);
}

} // namespace zetalab
