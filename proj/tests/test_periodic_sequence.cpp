#include <doctest.h>

#include "zetalab/periodic_sequence.hpp"

using namespace zetalab;

TEST_CASE("minimal periods are accepted") {
    PeriodicSequence one(std::vector<cplx>{cplx{1.0, 0.0}});
    CHECK(one.period() == 1);
    PeriodicSequence alt({{1.0, 0.0}, {-1.0, 0.0}});
    CHECK(alt.period() == 2);
    PeriodicSequence three({{1.0, 0.0}, {2.0, 0.0}, {3.0, 0.0}});
    CHECK(three.period() == 3);
}

TEST_CASE("non-minimal periods are rejected, not reduced") {
    CHECK_THROWS_AS(PeriodicSequence({{1.0, 0.0}, {1.0, 0.0}}), domain_error);
    CHECK_THROWS_AS(PeriodicSequence({{1.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}}),
                    domain_error);
    CHECK_THROWS_AS(PeriodicSequence({{2.0, 1.0}, {2.0, 1.0}, {2.0, 1.0}}), domain_error);
    // same multiset, different order: period 2 genuinely minimal
    CHECK_NOTHROW(PeriodicSequence({{1.0, 0.0}, {2.0, 0.0}}));
}

TEST_CASE("empty input is rejected") { CHECK_THROWS_AS(PeriodicSequence({}), domain_error); }

TEST_CASE("indexing wraps with the period") {
    PeriodicSequence b({{1.0, 0.0}, {2.0, 0.0}, {3.0, 0.0}});
    CHECK(b.at(0) == cplx(1.0, 0.0));
    CHECK(b.at(4) == cplx(2.0, 0.0));
    CHECK(b.at(3000000000ULL) == cplx(1.0, 0.0));
}

TEST_CASE("residue is the period mean") {
    PeriodicSequence b({{3.0, 0.0}, {1.0, 0.0}});
    CHECK(b.residue() == cplx(2.0, 0.0));
    PeriodicSequence alt({{1.0, 0.0}, {-1.0, 0.0}});
    CHECK(alt.residue() == cplx(0.0, 0.0));
    PeriodicSequence c({{0.0, 2.0}, {1.0, 0.0}, {0.0, 0.0}});
    CHECK(std::abs(c.residue() - cplx(1.0 / 3.0, 2.0 / 3.0)) < 1e-16);
}
