#include <doctest.h>

#include <cmath>

#include "zetalab/distribution.hpp"

using namespace zetalab;

TEST_CASE("orbit samples are the shifted strip values") {
    auto inst = ZetaInstance::riemann(prime_partition(2, 1));
    double h = prime_partition(2, 1).h;
    DistributionSample orb = shift_orbit_sample(inst, cplx(0.8, 0.0), h, 25, 1);
    REQUIRE(orb.values.size() == 26);
    for (std::uint64_t k : {0ULL, 3ULL, 25ULL}) {
        cplx want = phi_strip_eval(inst, cplx(0.8, h * static_cast<double>(k)), 1e-12);
        CHECK(std::abs(orb.values[k] - want) < 1e-9 * std::max(1.0, std::abs(want)));
    }
    CHECK(orb.provenance.find("shift_orbit") != std::string::npos);
    CHECK(orb.provenance.find("N=25") != std::string::npos);
}

TEST_CASE("an orbit through the pole aborts with context") {
    auto inst = ZetaInstance::riemann();
    CHECK_THROWS_AS(shift_orbit_sample(inst, cplx(1.0, 0.0), 2.0, 5, 1), overflow_error);
}

TEST_CASE("haar samples are reproducible and schedule independent") {
    auto inst = ZetaInstance::riemann(prime_partition(2, 1));
    DistributionSample a = haar_twisted_sample(inst, cplx(0.8, 0.0), 60, 42, 150, 1.0, 1);
    DistributionSample b = haar_twisted_sample(inst, cplx(0.8, 0.0), 60, 42, 150, 1.0, 3);
    REQUIRE(a.values.size() == 60);
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        CHECK(a.values[i].real() == b.values[i].real());
        CHECK(a.values[i].imag() == b.values[i].imag());
    }
    DistributionSample c = haar_twisted_sample(inst, cplx(0.8, 0.0), 60, 43, 150, 1.0, 1);
    int diff = 0;
    for (std::size_t i = 0; i < a.values.size(); ++i) diff += a.values[i] != c.values[i];
    CHECK(diff == 60);
    CHECK(a.provenance.find("seed=42") != std::string::npos);
}

TEST_CASE("prefixes of the haar stream do not depend on the count") {
    auto inst = ZetaInstance::riemann(prime_partition(2, 1));
    DistributionSample small = haar_twisted_sample(inst, cplx(0.8, 0.0), 10, 42, 150, 1.0, 1);
    DistributionSample big = haar_twisted_sample(inst, cplx(0.8, 0.0), 25, 42, 150, 1.0, 2);
    for (std::size_t i = 0; i < 10; ++i) CHECK(small.values[i] == big.values[i]);
}

TEST_CASE("comparison of a sample with itself is null") {
    auto inst = ZetaInstance::riemann(prime_partition(2, 1));
    DistributionSample a = haar_twisted_sample(inst, cplx(0.8, 0.0), 80, 7, 100, 1.0, 1);
    DistributionComparison cmp = distribution_compare(a, a, 0);
    CHECK(cmp.energy == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(cmp.ks_re == 0.0);
    CHECK(cmp.ks_im == 0.0);
    CHECK(cmp.used_a == 80);
    CHECK(cmp.used_b == 80);
}

TEST_CASE("separated clouds have unit KS distance and positive energy") {
    DistributionSample a{std::vector<cplx>(50, cplx(0.0, 0.0)), "a"};
    DistributionSample b{std::vector<cplx>(50, cplx(3.0, 4.0)), "b"};
    DistributionComparison cmp = distribution_compare(a, b, 0);
    CHECK(cmp.ks_re == 1.0);
    CHECK(cmp.ks_im == 1.0);
    // energy distance of point masses at distance 5: 2*5 - 0 - 0
    CHECK(cmp.energy == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("thinning caps the pairwise stage but not the marginals") {
    std::vector<cplx> av(1000), bv(900);
    for (int i = 0; i < 1000; ++i) av[i] = cplx(i * 0.001, 0.0);
    for (int i = 0; i < 900; ++i) bv[i] = cplx(i * 0.001 + 0.3, 0.0);
    DistributionComparison cmp = distribution_compare({av, "a"}, {bv, "b"}, 128);
    CHECK(cmp.used_a <= 128);
    CHECK(cmp.used_b <= 128);
    CHECK(cmp.energy > 0.0);
    // KS over the full samples: CDF gap at the 0.3 offset
    CHECK(cmp.ks_re == doctest::Approx(0.3).epsilon(0.02));
}

TEST_CASE("mismatched comparison inputs are rejected") {
    DistributionSample empty{{}, "empty"};
    DistributionSample one{{cplx(1.0, 0.0)}, "one"};
    CHECK_THROWS_AS(distribution_compare(empty, one, 0), domain_error);
}
