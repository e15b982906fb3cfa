#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "zetalab/errors.hpp"
#include "zetalab/numeric.hpp"
#include "zetalab/prime_partition.hpp"

namespace zetalab {

// A point on the product torus: one unimodular phase per stored prime and,
// per alpha-slot, one phase per stored integer index. Unstored coordinates
// project to 1, so finite truncations only ever touch finitely many of them.
struct TorusPoint {
    std::map<std::uint64_t, cplx> prime_phases;
    std::vector<std::map<std::uint64_t, cplx>> integer_phases; // slot -> (m -> phase)

    static TorusPoint identity(std::size_t slots = 0);

    cplx prime_phase(std::uint64_t p) const;
    cplx integer_phase(std::size_t slot, std::uint64_t m) const;

    // completely multiplicative extension omega(k) = prod omega(p)^e
    cplx multiplicative(std::uint64_t k) const;

    // throws domain_error if any stored phase is off the unit circle by > 1e-12
    void validate_unit_modulus() const;
};

// Haar draw with counter-based randomness: each coordinate's phase is a pure
// function of (seed, coordinate), independent of sampling order.
TorusPoint haar_sample(std::span<const std::uint64_t> prime_support,
                       const std::vector<std::vector<std::uint64_t>>& integer_supports,
                       std::uint64_t seed);

// Apply `steps` steps of the shift rotation: prime p phase picks up
// p^{-i h steps}, integer (slot j, m) picks up (m + alpha_j)^{-i h steps}.
// A partition, when given, must contain the stored prime support in its kept set.
TorusPoint rotate(const TorusPoint& omega, const std::optional<PrimePartition>& partition,
                  std::span<const double> alphas, double h, std::int64_t steps);

} // namespace zetalab
