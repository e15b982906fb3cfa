#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

// Error taxonomy. Each class maps to a distinct process exit code in the CLI
// (see io.hpp) so scripted callers can tell a bad config from a bad sample point.

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an evaluator (sigma too small,
// alpha out of (0,1], non-unimodular torus phase, ...).
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation requested at (or within guard distance of) a pole.
struct pole_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Weyl closed form requested for an index whose phase is a multiple of 2*pi.
struct degeneracy_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Series/product evaluation requested outside its half-plane of convergence.
struct convergence_domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An Euler factor vanishes at the requested point.
struct singular_factor_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Critical-strip evaluation requested for a product spec with no declared
// analytic continuation.
struct unsupported_instance_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Target function rejected (vanishes on its region, sampled off-grid, ...).
struct target_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numeric overflow or a non-finite intermediate.
struct overflow_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace zetalab
