#include "zetalab/torus_point.hpp"

#include <cmath>
#include <string>

#include "zetalab/counter_rng.hpp"
#include "zetalab/primes.hpp"

namespace zetalab {

TorusPoint TorusPoint::identity(std::size_t slots) {
    TorusPoint pt;
    pt.integer_phases.resize(slots);
    return pt;
}

cplx TorusPoint::prime_phase(std::uint64_t p) const {
    auto it = prime_phases.find(p);
    return it == prime_phases.end() ? cplx{1.0, 0.0} : it->second;
}

cplx TorusPoint::integer_phase(std::size_t slot, std::uint64_t m) const {
    if (slot >= integer_phases.size()) return {1.0, 0.0};
    auto it = integer_phases[slot].find(m);
    return it == integer_phases[slot].end() ? cplx{1.0, 0.0} : it->second;
}

cplx TorusPoint::multiplicative(std::uint64_t k) const {
    if (k == 0) throw domain_error("torus point: multiplicative extension starts at k = 1");
    cplx out = 1.0;
    for (const auto& [p, e] : factorize(k)) {
        cplx w = prime_phase(p);
        for (int i = 0; i < e; ++i) out *= w;
    }
    return out;
}

void TorusPoint::validate_unit_modulus() const {
    auto check = [](cplx z, const std::string& what) {
        if (std::abs(std::abs(z) - 1.0) > 1e-12)
            throw domain_error("torus point: " + what + " is off the unit circle");
    };
    for (const auto& [p, z] : prime_phases) check(z, "prime phase at " + std::to_string(p));
    for (std::size_t j = 0; j < integer_phases.size(); ++j)
        for (const auto& [m, z] : integer_phases[j])
            check(z, "integer phase (" + std::to_string(j) + "," + std::to_string(m) + ")");
}

namespace {

// key-space tags keeping prime and integer coordinates on disjoint streams
constexpr std::uint64_t TAG_PRIME = 0x70; // 'p'
constexpr std::uint64_t TAG_INT = 0x6d;   // 'm'

} // namespace

TorusPoint haar_sample(std::span<const std::uint64_t> prime_support,
                       const std::vector<std::vector<std::uint64_t>>& integer_supports,
                       std::uint64_t seed) {
    TorusPoint pt;
    for (std::uint64_t p : prime_support)
        pt.prime_phases[p] = random_phase(seed, mix_key(TAG_PRIME, p));
    pt.integer_phases.resize(integer_supports.size());
    for (std::size_t j = 0; j < integer_supports.size(); ++j)
        for (std::uint64_t m : integer_supports[j])
            pt.integer_phases[j][m] = random_phase(seed, mix_key(TAG_INT, j, m));
    return pt;
}

TorusPoint rotate(const TorusPoint& omega, const std::optional<PrimePartition>& partition,
                  std::span<const double> alphas, double h, std::int64_t steps) {
    if (partition) {
        for (const auto& [p, z] : omega.prime_phases) {
            (void)z;
            if (partition->in_removed(p))
                throw domain_error("rotate: stored prime " + std::to_string(p) +
                                   " lies outside the kept prime set");
        }
    }
    double a = -h * static_cast<double>(steps);
    TorusPoint out = omega;
    for (auto& [p, z] : out.prime_phases)
        z *= cis(std::fmod(a * std::log(static_cast<double>(p)), TWO_PI));
    for (std::size_t j = 0; j < out.integer_phases.size(); ++j) {
        if (j >= alphas.size())
            throw domain_error("rotate: missing alpha for slot " + std::to_string(j));
        for (auto& [m, z] : out.integer_phases[j])
            z *= cis(std::fmod(a * std::log(static_cast<double>(m) + alphas[j]), TWO_PI));
    }
    return out;
}

} // namespace zetalab
