#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "zetalab/errors.hpp"
#include "zetalab/numeric.hpp"

namespace zetalab {

// Periodic coefficient sequence b_0, ..., b_{q-1}, b_{m+q} = b_m.
// The stored period must be minimal: inputs that repeat with a proper divisor
// of q are rejected rather than silently reduced, so every downstream formula
// indexed by q means the same thing for the same object.
class PeriodicSequence {
public:
    explicit PeriodicSequence(std::vector<cplx> values) : values_(std::move(values)) {
        if (values_.empty()) throw domain_error("periodic sequence must be nonempty");
        check_minimal();
    }

    std::size_t period() const { return values_.size(); }

    cplx at(std::uint64_t m) const { return values_[m % values_.size()]; }

    const std::vector<cplx>& values() const { return values_; }

    // Mean over one period; the residue of sum b_m (m+alpha)^{-s} at s = 1.
    cplx residue() const {
        cplx s = 0.0;
        for (cplx v : values_) s += v;
        return s / static_cast<double>(values_.size());
    }

private:
    void check_minimal() const {
        std::size_t q = values_.size();
        for (std::size_t d = 1; d < q; ++d) {
            if (q % d != 0) continue;
            bool repeats = true;
            for (std::size_t m = 0; m < q && repeats; ++m)
                repeats = values_[m] == values_[m % d];
            if (repeats)
                throw domain_error("period " + std::to_string(q) +
                                   " is not minimal (repeats with period " + std::to_string(d) + ")");
        }
    }

    std::vector<cplx> values_;
};

} // namespace zetalab
