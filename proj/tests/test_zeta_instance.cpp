#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "zetalab/zeta_instance.hpp"

using namespace zetalab;

namespace {
const PeriodicSequence ALT({{1.0, 0.0}, {-1.0, 0.0}});
}

TEST_CASE("coefficients of the two kinds") {
    auto r = ZetaInstance::riemann();
    for (std::uint64_t n : {1ULL, 2ULL, 17ULL, 1000ULL}) CHECK(r.coefficient(n) == cplx(1.0, 0.0));

    auto d = ZetaInstance::periodic_dirichlet(ALT);
    CHECK(d.coefficient(1) == cplx(1.0, 0.0));
    CHECK(d.coefficient(2) == cplx(-1.0, 0.0));
    CHECK(d.coefficient(3) == cplx(1.0, 0.0));
    CHECK(d.coefficient(4) == cplx(-1.0, 0.0));
    CHECK(d.local_root(2) == cplx(-1.0, 0.0));
    CHECK(d.local_root(3) == cplx(1.0, 0.0));
}

TEST_CASE("partition zeroes partial coefficients off the semigroup") {
    auto inst = ZetaInstance::riemann(prime_partition(2, 1));
    CHECK(inst.partial_coefficient(3) == cplx(1.0, 0.0));
    CHECK(inst.partial_coefficient(6) == cplx(0.0, 0.0));
    CHECK(inst.partial_coefficient(8) == cplx(0.0, 0.0));
    auto plain = ZetaInstance::riemann();
    CHECK(plain.partial_coefficient(8) == cplx(1.0, 0.0));
}

TEST_CASE("residues at s = 1") {
    CHECK(ZetaInstance::riemann().residue_at_one() == cplx(1.0, 0.0));
    CHECK(ZetaInstance::periodic_dirichlet(ALT).residue_at_one() == cplx(0.0, 0.0));
    PeriodicSequence b({{2.0, 0.0}, {1.0, 0.0}});
    CHECK(ZetaInstance::periodic_dirichlet(b).residue_at_one() == cplx(1.5, 0.0));
}

TEST_CASE("product-spec view exists only in table form") {
    CHECK_NOTHROW(ZetaInstance::riemann().to_spec());
    CHECK_THROWS_AS(ZetaInstance::periodic_dirichlet(ALT).to_spec(), unsupported_instance_error);
}

TEST_CASE("strip evaluation against the reference evaluator") {
    auto r = ZetaInstance::riemann();
    CHECK(std::abs(phi_strip_eval(r, 2.0, 1e-12) - PI * PI / 6.0) < 1e-13);

    auto partial = ZetaInstance::riemann(prime_partition(2, 1));
    CHECK(std::abs(phi_strip_eval(partial, 2.0, 1e-12) - PI * PI / 8.0) < 1e-13);

    for (cplx s : {cplx(0.75, 3.0), cplx(0.6, -14.0), cplx(0.9, 0.0), cplx(1.8, 7.7)}) {
        cplx want = oracle::zeta(s) * (1.0 - std::exp(-s * std::log(2.0)));
        CHECK(std::abs(phi_strip_eval(partial, s, 1e-12) - want) <
              1e-10 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("strip evaluation of a periodic instance") {
    auto inst = ZetaInstance::periodic_dirichlet(ALT, prime_partition(2, 1));
    // eta(s) * (1 - chi(2) 2^{-s}); entire, so s = 1 is fine
    cplx got = phi_strip_eval(inst, 1.0, 1e-12);
    CHECK(std::abs(got - std::log(2.0) * 1.5) < 1e-12);

    cplx s{0.8, 5.0};
    cplx want = oracle::periodic_hurwitz(s, 1.0, ALT.values()) *
                (1.0 + std::exp(-s * std::log(2.0)));
    CHECK(std::abs(phi_strip_eval(inst, s, 1e-12) - want) < 1e-10 * std::abs(want));
}

TEST_CASE("strip evaluation guards") {
    auto r = ZetaInstance::riemann();
    CHECK_THROWS_AS(phi_strip_eval(r, 0.5, 1e-12), domain_error);
    CHECK_THROWS_AS(phi_strip_eval(r, cplx(0.3, 10.0), 1e-12), domain_error);
    CHECK_THROWS_AS(phi_strip_eval(r, 1.0, 1e-12), pole_error);
    auto partial = ZetaInstance::riemann(prime_partition(2, 1));
    CHECK_THROWS_AS(phi_strip_eval(partial, 1.0, 1e-12), pole_error);
}

TEST_CASE("coefficient second moment") {
    auto r = ZetaInstance::riemann();
    CHECK(std::abs(r.coefficient_second_moment(0.7) - 3.1055472779775809) < 1e-10); // zeta(1.4)

    auto partial = ZetaInstance::riemann(prime_partition(2, 1));
    double want = 3.1055472779775809 * (1.0 - std::pow(2.0, -1.4));
    CHECK(std::abs(partial.coefficient_second_moment(0.7) - want) < 1e-10);

    // |chi| = 1 everywhere, so the moment matches the all-ones one
    auto d = ZetaInstance::periodic_dirichlet(ALT);
    CHECK(std::abs(d.coefficient_second_moment(0.7) - 3.1055472779775809) < 1e-10);

    CHECK_THROWS_AS(r.coefficient_second_moment(0.5), convergence_domain_error);
}

TEST_CASE("chi accessor is only for the periodic kind") {
    CHECK_THROWS_AS(ZetaInstance::riemann().chi(), domain_error);
    CHECK(ZetaInstance::periodic_dirichlet(ALT).chi().period() == 2);
}
