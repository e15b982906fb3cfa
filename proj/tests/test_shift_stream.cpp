#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "zetalab/hurwitz.hpp"
#include "zetalab/shift_stream.hpp"
#include "zetalab/zeta_instance.hpp"

using namespace zetalab;

namespace {
const PeriodicSequence ALT({{1.0, 0.0}, {-1.0, 0.0}});
}

TEST_CASE("instance stream matches pointwise evaluation") {
    auto inst = ZetaInstance::riemann(prime_partition(2, 1));
    double h = prime_partition(2, 1).h;
    ShiftGrid grid{cplx(0.8, 0.3), h, 40};
    auto vals = stream_instance_shifts(inst, grid, 1);
    REQUIRE(vals.size() == 40);
    for (std::uint64_t k : {0ULL, 1ULL, 7ULL, 39ULL}) {
        cplx s = grid.s0 + cplx(0.0, h * static_cast<double>(k));
        cplx want = phi_strip_eval(inst, s, 1e-12);
        CHECK(std::abs(vals[k] - want) < 1e-9 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("periodic stream matches pointwise evaluation") {
    double alpha = 0.3183098861837907;
    ShiftGrid grid{cplx(0.6, -1.0), 2.5, 35};
    auto vals = stream_periodic_hurwitz_shifts(alpha, ALT, grid, 1);
    REQUIRE(vals.size() == 35);
    for (std::uint64_t k : {0ULL, 5ULL, 34ULL}) {
        cplx s = grid.s0 + cplx(0.0, 2.5 * static_cast<double>(k));
        cplx want = periodic_hurwitz_zeta(s, alpha, ALT, 1e-12);
        CHECK(std::abs(vals[k] - want) < 1e-9 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("stream output is bitwise independent of the thread count") {
    auto inst = ZetaInstance::riemann(prime_partition(2, 1));
    ShiftGrid grid{cplx(0.7, 0.0), 3.1, 300};
    auto one = stream_instance_shifts(inst, grid, 1);
    auto four = stream_instance_shifts(inst, grid, 4);
    REQUIRE(one.size() == four.size());
    for (std::size_t k = 0; k < one.size(); ++k) {
        CHECK(one[k].real() == four[k].real());
        CHECK(one[k].imag() == four[k].imag());
    }

    auto h1 = stream_periodic_hurwitz_shifts(0.5, ALT, grid, 1);
    auto h3 = stream_periodic_hurwitz_shifts(0.5, ALT, grid, 3);
    for (std::size_t k = 0; k < h1.size(); ++k) {
        CHECK(h1[k].real() == h3[k].real());
        CHECK(h1[k].imag() == h3[k].imag());
    }
}

TEST_CASE("rotation recurrence stays accurate across block restarts") {
    // small h keeps the run cheap while the k range crosses the restart point
    auto inst = ZetaInstance::riemann();
    ShiftGrid grid{cplx(1.5, 0.0), 0.01, 8300};
    auto vals = stream_instance_shifts(inst, grid, 1);
    for (std::uint64_t k : {8191ULL, 8192ULL, 8299ULL}) {
        cplx s = grid.s0 + cplx(0.0, 0.01 * static_cast<double>(k));
        cplx want = oracle::zeta(s);
        CHECK(std::abs(vals[k] - want) < 1e-9);
    }
}

TEST_CASE("grids outside the continuation domain are refused") {
    auto inst = ZetaInstance::riemann();
    CHECK_THROWS_AS(stream_instance_shifts(inst, {cplx(0.5, 0.0), 1.0, 10}, 1), domain_error);
    CHECK_THROWS_AS(stream_periodic_hurwitz_shifts(0.5, ALT, {cplx(0.0, 0.0), 1.0, 10}, 1),
                    domain_error);
    CHECK_THROWS_AS(stream_periodic_hurwitz_shifts(1.5, ALT, {cplx(2.0, 0.0), 1.0, 10}, 1),
                    domain_error);
}

TEST_CASE("a shift landing on the pole yields a non-finite value, not a throw") {
    auto inst = ZetaInstance::riemann();
    ShiftGrid grid{cplx(1.0, 0.0), 1.0, 3};
    auto vals = stream_instance_shifts(inst, grid, 1);
    CHECK(!finite(vals[0]));
    CHECK(finite(vals[1]));
    CHECK(finite(vals[2]));
}

TEST_CASE("degenerate grids are refused") {
    auto inst = ZetaInstance::riemann();
    CHECK_THROWS_AS(stream_instance_shifts(inst, {cplx(2.0, 0.0), 1.0, 0}, 1), domain_error);
    CHECK_THROWS_AS(stream_instance_shifts(inst, {cplx(2.0, 0.0), 0.0, 5}, 1), domain_error);
}
