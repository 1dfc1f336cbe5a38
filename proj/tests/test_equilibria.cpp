#include <doctest.h>

#include <cmath>

#include "rds11/equilibria.hpp"
#include "rds11/model.hpp"
#include "support.hpp"

using namespace rds11;
using testsup::draw_params;
using testsup::make_rng;
using testsup::Region;

TEST_SUITE_BEGIN("equilibria");

TEST_CASE("constant-y case has the rational fixed point") {
    const EquilibriumSet eq = equilibria(validate(CaseId(1), {1, 1, 1, 1}));
    REQUIRE(eq.kind() == EquilibriumSet::Kind::One);
    CHECK(eq.point().x == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(eq.point().y == 1.0);
}

TEST_CASE("reciprocal-x case loses its equilibrium at alpha1 <= alpha2") {
    CHECK(equilibria(validate(CaseId(3), {1, 1, 1})).kind() ==
          EquilibriumSet::Kind::None);
    CHECK(equilibria(validate(CaseId(3), {0.9, 1, 1})).kind() ==
          EquilibriumSet::Kind::None);
    const EquilibriumSet eq = equilibria(validate(CaseId(3), {2, 1, 1}));
    REQUIRE(eq.kind() == EquilibriumSet::Kind::One);
    // ybar = alpha2*A1/(alpha1-alpha2) = 1, xbar = alpha1/(A1+ybar) = 1
    CHECK(eq.point().x == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(eq.point().y == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("saturating-y case splits at A2 = 1") {
    const EquilibriumSet two = equilibria(validate(CaseId(13), {1, 1, 0.5}));
    REQUIRE(two.kind() == EquilibriumSet::Kind::Two);
    CHECK(two.saddle().x == 1.0);
    CHECK(two.saddle().y == 0.0);
    CHECK(two.interior().x == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(two.interior().y == doctest::Approx(0.5).epsilon(1e-15));

    CHECK(equilibria(validate(CaseId(13), {1, 1, 1.0})).kind() ==
          EquilibriumSet::Kind::One);
    CHECK(equilibria(validate(CaseId(13), {1, 1, 1.5})).kind() ==
          EquilibriumSet::Kind::One);
}

TEST_CASE("linear-y case degenerates to a continuum at gamma2 = 1") {
    const EquilibriumSet eq = equilibria(validate(CaseId(4), {2, 1, 1}));
    REQUIRE(eq.kind() == EquilibriumSet::Kind::Continuum);
    const State at0 = eq.continuum_at(0.0);
    CHECK(at0.x == 2.0);
    CHECK(at0.y == 0.0);
    const State at3 = eq.continuum_at(3.0);
    CHECK(at3.x == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(eq.continuum_at(-1.0), DomainViolation);

    CHECK(equilibria(validate(CaseId(4), {2, 1, 0.5})).kind() ==
          EquilibriumSet::Kind::One);
    CHECK(equilibria(validate(CaseId(4), {2, 1, 1.5})).kind() ==
          EquilibriumSet::Kind::One);
}

TEST_CASE("affine-x case hits the surd closed form") {
    const EquilibriumSet eq = equilibria(validate(CaseId(22), {2, 1, 1}));
    REQUIRE(eq.kind() == EquilibriumSet::Kind::One);
    const double r3 = std::sqrt(3.0);
    CHECK(eq.point().x == doctest::Approx(r3 - 1.0).epsilon(1e-15));
    CHECK(eq.point().y == doctest::Approx(r3).epsilon(1e-15));
}

TEST_CASE("affine-y case loses its equilibrium at gamma2 >= 1") {
    CHECK(equilibria(validate(CaseId(19), {1, 1, 1, 1})).kind() ==
          EquilibriumSet::Kind::None);
    CHECK(equilibria(validate(CaseId(19), {1, 1, 1, 1.5})).kind() ==
          EquilibriumSet::Kind::None);
    CHECK(equilibria(validate(CaseId(19), {1, 1, 1, 0.999})).kind() ==
          EquilibriumSet::Kind::One);
}

TEST_CASE("every isolated equilibrium is a fixed point to 1e-10") {
    auto rng = make_rng(404);
    for (int id : CaseId::indices()) {
        const CaseId cid(id);
        for (int rep = 0; rep < 200; ++rep) {
            // alternate sides of the parameter regions where they exist
            const Region region = rep % 2 == 0 ? Region::Convergent : Region::Any;
            const CaseParams cp = draw_params(cid, rng, region, 1.02);
            const EquilibriumSet eq = equilibria(cp);
            for (const State& p : eq.isolated_points()) {
                CHECK(p.x >= 0.0);
                CHECK(p.y >= 0.0);
                CHECK(sup_dist(step_case(cp, p), p) <= 1e-10);
            }
            if (eq.kind() == EquilibriumSet::Kind::Continuum) {
                for (int i = 0; i < 20; ++i) {
                    const State p = eq.continuum_at(testsup::log_uniform(rng, 1e-3, 1e3));
                    CHECK(sup_dist(step_case(cp, p), p) <= 1e-10);
                }
            }
        }
    }
}

TEST_CASE("region gating straddles each boundary exactly") {
    // alpha1 vs alpha2 for the reciprocal-x and ratio-x cases
    for (int id : {3, 24}) {
        for (double a1 : {0.5, 0.9, 0.999999, 1.0})
            CHECK(equilibria(validate(CaseId(id), {a1, 1, 1})).kind() ==
                  EquilibriumSet::Kind::None);
        for (double a1 : {1.000001, 1.5, 4.0})
            CHECK(equilibria(validate(CaseId(id), {a1, 1, 1})).kind() ==
                  EquilibriumSet::Kind::One);
    }
    // gamma2 vs 1 for the affine-y case
    for (double g2 : {1.0, 1.000001, 2.0})
        CHECK(equilibria(validate(CaseId(19), {1, 1, 1, g2})).kind() ==
              EquilibriumSet::Kind::None);
    for (double g2 : {0.999999, 0.5})
        CHECK(equilibria(validate(CaseId(19), {1, 1, 1, g2})).kind() ==
              EquilibriumSet::Kind::One);
    // A2 vs 1 for the saturating-y case
    for (double A2 : {0.999999, 0.5})
        CHECK(equilibria(validate(CaseId(13), {1, 1, A2})).kind() ==
              EquilibriumSet::Kind::Two);
    for (double A2 : {1.0, 1.000001, 2.0})
        CHECK(equilibria(validate(CaseId(13), {1, 1, A2})).kind() ==
              EquilibriumSet::Kind::One);
}

TEST_CASE("quadratic closed forms stay accurate when the linear term dominates") {
    // alpha1 << alpha2 + A1*A2 makes the unstabilized root formula cancel
    const CaseParams cp = validate(CaseId(32), {1e-8, 1.0, 10.0, 10.0});
    const EquilibriumSet eq = equilibria(cp);
    REQUIRE(eq.kind() == EquilibriumSet::Kind::One);
    CHECK(eq.point().x > 0.0);
    CHECK(sup_dist(step_case(cp, eq.point()), eq.point()) <=
          1e-12 * std::max(1.0, sup_norm(eq.point())));

    // same regime for the affine-x case
    const CaseParams c22 = validate(CaseId(22), {1e-10, 1.0, 1e4});
    const State p = equilibria(c22).point();
    CHECK(p.x > 0.0);
    CHECK(sup_dist(step_case(c22, p), p) <= 1e-12 * std::max(1.0, sup_norm(p)));
}

TEST_SUITE_END();
