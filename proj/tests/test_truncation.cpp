#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "zetalab/counter_rng.hpp"
#include "zetalab/primes.hpp"
#include "zetalab/truncation.hpp"

using namespace zetalab;

namespace {
const PeriodicSequence ALT({{1.0, 0.0}, {-1.0, 0.0}});
}

TEST_CASE("weight shapes") {
    CHECK(weight_v1(0.0, 100.0, 1.0) == 1.0);
    CHECK(weight_v1(100.0, 100.0, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(weight_v2(0.0, 100.0, 0.5, 1.0) ==
          doctest::Approx(std::exp(-0.5 / 100.5)).epsilon(1e-15));
    // v2 at m = n equals e^{-1} whatever alpha
    CHECK(weight_v2(100.0, 100.0, 0.3, 0.8) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
}

TEST_CASE("cutoff really caps the weighted tail below 1e-12") {
    for (double sigma1 : {0.6, 1.0, 2.0}) {
        std::uint64_t n = 100;
        std::uint64_t M = weight_cutoff(n, sigma1, 1.0);
        double tail = 0.0;
        for (std::uint64_t k = M + 1; k <= 6 * M; ++k)
            tail += weight_v1(static_cast<double>(k), static_cast<double>(n), sigma1) /
                    std::sqrt(static_cast<double>(k));
        CHECK(tail < 1e-12);
    }
}

// the v1 weight biases the series by Theta(log(n)/n) at sigma1 = 1; the
// checks pin that rate from both sides instead of a flat tolerance
TEST_CASE("weighted series approaches the function at the weight's rate") {
    auto inst = ZetaInstance::riemann();
    cplx want{PI * PI / 6.0, 0.0};
    double prev = 1e9;
    for (std::uint64_t n : {50ULL, 200ULL, 800ULL}) {
        cplx got = weighted_phi_truncation(inst, 2.0, {n, 1.0});
        double err = std::abs(got - want);
        CHECK(err < prev);
        double scaled = err * static_cast<double>(n) / std::log(static_cast<double>(n));
        CHECK(scaled > 0.8);
        CHECK(scaled < 1.6);
        prev = err;
    }
}

TEST_CASE("weighted series respects the partition semigroup") {
    auto partial = ZetaInstance::riemann(prime_partition(2, 1));
    cplx got = weighted_phi_truncation(partial, 2.0, {400, 1.0});
    double scaled = std::abs(got - cplx{PI * PI / 8.0, 0.0}) * 400.0 / std::log(400.0);
    CHECK(scaled > 0.4);
    CHECK(scaled < 0.9);
}

TEST_CASE("weighted periodic series approaches the periodic function") {
    // mean-zero coefficients cancel the log factor; the bias is Theta(1/n)
    double alpha = 0.3183098861837907;
    cplx want = oracle::periodic_hurwitz(cplx(1.5, 2.0), alpha, ALT.values());
    double prev = 1e9;
    for (std::uint64_t n : {50ULL, 200ULL, 800ULL}) {
        cplx got = weighted_hurwitz_truncation(alpha, ALT, cplx(1.5, 2.0), {n, 1.0});
        double err = std::abs(got - want);
        CHECK(err < prev);
        double scaled = err * static_cast<double>(n);
        CHECK(scaled > 1.5);
        CHECK(scaled < 3.0);
        prev = err;
    }
}

TEST_CASE("sigma1 must exceed one half") {
    auto inst = ZetaInstance::riemann();
    CHECK_THROWS_AS(weighted_phi_truncation(inst, 2.0, {100, 0.5}), domain_error);
    CHECK_THROWS_AS(weighted_hurwitz_truncation(0.5, ALT, 2.0, {100, 0.4}), domain_error);
}

TEST_CASE("identity twist reproduces the untwisted series") {
    auto inst = ZetaInstance::riemann(prime_partition(2, 1));
    TorusPoint id = TorusPoint::identity();
    TruncationParams tp{200, 1.0};
    CHECK(twisted_phi_series(inst, cplx(0.9, 3.0), id, tp, 1e-12) ==
          weighted_phi_truncation(inst, cplx(0.9, 3.0), tp));
    TorusPoint id1 = TorusPoint::identity(1);
    CHECK(twisted_hurwitz_series(0.25, ALT, cplx(0.9, 3.0), id1, 0, tp, 1e-12) ==
          weighted_hurwitz_truncation(0.25, ALT, cplx(0.9, 3.0), tp));
}

TEST_CASE("plain twisted series equals the restricted Euler product") {
    // completely multiplicative twist on the odd semigroup at s = 3
    auto inst = ZetaInstance::riemann(prime_partition(2, 1));
    TorusPoint omega;
    auto ps = primes_up_to(2000000);
    for (std::uint64_t p : ps)
        if (p != 2) omega.prime_phases[p] = random_phase(99, p);

    cplx series = twisted_phi_series(inst, 3.0, omega, std::nullopt, 1e-10);

    cplx product{1.0, 0.0};
    for (std::uint64_t p : ps) {
        if (p == 2) continue;
        double pd = static_cast<double>(p);
        product /= 1.0 - omega.prime_phases.at(p) / (pd * pd * pd);
    }
    CHECK(std::abs(series - product) < 1e-9);
}

TEST_CASE("plain series outside sigma > 1 is refused; weights are not") {
    auto inst = ZetaInstance::riemann();
    TorusPoint id = TorusPoint::identity();
    CHECK_THROWS_AS(twisted_phi_series(inst, cplx(0.9, 0.0), id, std::nullopt, 1e-10),
                    convergence_domain_error);
    CHECK_NOTHROW(twisted_phi_series(inst, cplx(0.9, 0.0), id, TruncationParams{50, 1.0}, 1e-10));
}

TEST_CASE("twists must be unimodular") {
    auto inst = ZetaInstance::riemann();
    TorusPoint bad;
    bad.prime_phases[3] = cplx(0.5, 0.0);
    CHECK_THROWS_AS(twisted_phi_series(inst, 3.0, bad, std::nullopt, 1e-10), domain_error);
}

TEST_CASE("hurwitz twist acts through the selected slot only") {
    TorusPoint omega = TorusPoint::identity(2);
    omega.integer_phases[1][0] = cplx(-1.0, 0.0); // slot 1 flips m = 0
    TruncationParams tp{100, 1.0};
    cplx base = weighted_hurwitz_truncation(0.5, ALT, 2.0, tp);
    cplx slot0 = twisted_hurwitz_series(0.5, ALT, 2.0, omega, 0, tp, 1e-12);
    cplx slot1 = twisted_hurwitz_series(0.5, ALT, 2.0, omega, 1, tp, 1e-12);
    CHECK(slot0 == base);
    // flipping the m = 0 term subtracts it twice
    cplx term0 = weight_v2(0.0, 100.0, 0.5, 1.0) * std::exp(-cplx(2.0, 0.0) * std::log(0.5));
    CHECK(std::abs(slot1 - (base - 2.0 * term0)) < 1e-14);
}
