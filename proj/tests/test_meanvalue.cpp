#include <doctest.h>

#include <cmath>

#include "zetalab/meanvalue.hpp"

using namespace zetalab;

TEST_CASE("discrete mean square hovers around the coefficient reference") {
    auto inst = ZetaInstance::riemann(prime_partition(2, 1));
    double h = prime_partition(2, 1).h;
    MeanSquare ms = mean_square_discrete(inst, 2.0, h, 400, 1);
    CHECK(ms.samples == 401);
    REQUIRE(ms.reference.has_value());
    // reference at sigma0 = 2: sum over odd n of n^{-4}
    double want = std::pow(PI, 4) / 90.0 * (1.0 - std::pow(2.0, -4.0));
    CHECK(*ms.reference == doctest::Approx(want).epsilon(1e-9));
    CHECK(ms.statistic / *ms.reference > 0.7);
    CHECK(ms.statistic / *ms.reference < 1.4);
}

TEST_CASE("continuous mean square integrates the same quantity") {
    auto inst = ZetaInstance::riemann(prime_partition(2, 1));
    MeanSquare coarse = mean_square_continuous(inst, 2.0, 30.0, 0.05, 1);
    MeanSquare fine = mean_square_continuous(inst, 2.0, 30.0, 0.025, 1);
    CHECK(coarse.samples == 601);
    CHECK(fine.samples == 1201);
    // trapezoid refinement converges; both already close
    CHECK(std::abs(coarse.statistic - fine.statistic) < 1e-4);
    REQUIRE(coarse.reference.has_value());
    CHECK(coarse.statistic / *coarse.reference > 0.7);
    CHECK(coarse.statistic / *coarse.reference < 1.4);
}

TEST_CASE("the moment abscissa bounds the evaluable line") {
    auto inst = ZetaInstance::riemann(prime_partition(2, 1));
    double h = prime_partition(2, 1).h;
    CHECK_THROWS_AS(mean_square_discrete(inst, 0.5, h, 50, 1), domain_error);
    MeanSquare ms = mean_square_discrete(inst, 0.51, h, 50, 1);
    REQUIRE(ms.reference.has_value());
    CHECK(*ms.reference > 0.0);
}

TEST_CASE("span validation") {
    auto inst = ZetaInstance::riemann(prime_partition(2, 1));
    CHECK_THROWS_AS(mean_square_continuous(inst, 2.0, 1.0, 0.8, 1), domain_error); // J < 2
    CHECK_THROWS_AS(mean_square_discrete(inst, 2.0, 0.0, 10, 1), domain_error);
}

TEST_CASE("mean square is thread count invariant") {
    auto inst = ZetaInstance::riemann(prime_partition(2, 1));
    double h = prime_partition(2, 1).h;
    MeanSquare one = mean_square_discrete(inst, 0.8, h, 300, 1);
    MeanSquare four = mean_square_discrete(inst, 0.8, h, 300, 4);
    CHECK(one.statistic == four.statistic);
}
