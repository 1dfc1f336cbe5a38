#include <doctest.h>

#include <cmath>
#include <vector>

#include "rds11/conjugacy.hpp"
#include "rds11/equilibria.hpp"
#include "rds11/model.hpp"
#include "support.hpp"

using namespace rds11;
using testsup::draw_domain_f_state;
using testsup::draw_params;
using testsup::make_rng;
using testsup::Region;

namespace {

constexpr int kConjugate[] = {3, 7, 10, 11, 13, 17, 19, 22, 24, 32};
constexpr int kAutonomous[] = {1, 2, 4, 5, 9, 20, 28};

}  // namespace

TEST_SUITE_BEGIN("conjugacy");

TEST_CASE("h and its inverse") {
    const CaseParams cp = validate(CaseId(22), {2, 1, 1});
    const State t = h_map(cp, State(1, 3));
    CHECK(t.x == 3.0);
    CHECK(t.y == doctest::Approx(1.0).epsilon(1e-15));

    // near the open right edge of the strip the second slot collapses to 0+
    const double x_max = 2.0;
    const State edge = h_map(cp, State(x_max * (1 - 1e-9), 5.0));
    CHECK(edge.y > 0.0);
    CHECK(edge.y < 1e-8);

    CHECK_THROWS_AS(h_map(cp, State(2.0, 1.0)), DomainViolation);   // x = alpha1/A1
    CHECK_THROWS_AS(h_map(cp, State(2.5, 1.0)), DomainViolation);
    CHECK_THROWS_AS(h_map(cp, State(1.0, 0.0)), DomainViolation);   // y = 0
    CHECK_THROWS_AS(h_inv_map(cp, State(0.0, 1.0)), DomainViolation);
}

TEST_CASE("h round-trips on both domains") {
    auto rng = make_rng(111);
    const CaseParams cp = validate(CaseId(7), {2.7, 0.9, 1.3});
    for (int rep = 0; rep < 1000; ++rep) {
        const State s = draw_domain_f_state(cp, rng);
        const State back = h_inv_map(cp, h_map(cp, s));
        CHECK(sup_dist(back, s) <= 1e-12 * std::max(1.0, sup_norm(s)));
        const State t = testsup::draw_state(rng, 1e-3, 1e3);
        const State fwd = h_map(cp, h_inv_map(cp, t));
        CHECK(sup_dist(fwd, t) <= 1e-12 * std::max(1.0, sup_norm(t)));
    }
}

TEST_CASE("g examples") {
    // Riccati-in-y case reads the current value from the first slot
    const CaseParams c10 = validate(CaseId(10), {1, 1, 4, 1});
    const State g10 = g_map(c10, State(1, 7));
    CHECK(g10.x == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(g10.y == 1.0);

    // second-order reductions read u_{n-1} from the second slot
    const CaseParams c3 = validate(CaseId(3), {2, 1, 1});
    const State g3 = g_map(c3, State(3, 5));
    CHECK(g3.x == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(g3.y == 3.0);

    const CaseParams c19 = validate(CaseId(19), {1, 1, 1, 0.5});
    const State g19 = g_map(c19, State(2, 9));
    CHECK(g19.x == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(g19.y == 2.0);
}

TEST_CASE("autonomous cases refuse the conjugacy machinery") {
    for (int id : kAutonomous) {
        CHECK(!is_conjugate_case(CaseId(id)));
        const CaseParams cp = draw_params(CaseId(id), make_rng(40 + id));
        CHECK_THROWS_AS(g_map(cp, State(1, 1)), NotConjugateCase);
        const std::vector<State> grid{State(0.1, 1.0)};
        CHECK_THROWS_AS(verify_conjugacy(cp, grid), NotConjugateCase);
        CHECK_THROWS_AS(riccati_coeffs(cp), NotConjugateCase);
        CHECK_THROWS_AS(ConjugacyTriple(cp), NotConjugateCase);
    }
    for (int id : kConjugate) CHECK(is_conjugate_case(CaseId(id)));
}

TEST_CASE("h_inv . g . h equals f on a grid, both parameter regions") {
    auto rng = make_rng(222);
    for (int id : kConjugate) {
        const CaseId cid(id);
        for (int rep = 0; rep < 6; ++rep) {
            const Region region = rep % 2 == 0 ? Region::Convergent : Region::Divergent;
            const CaseParams cp = draw_params(cid, rng, region);
            const double res = verify_conjugacy(cp, domain_grid(cp, 20, 20));
            CHECK(res <= 1e-12);
        }
    }
    // single-point example, residual at double rounding level
    const CaseParams cp = validate(CaseId(11), {2, 1, 1, 1});
    const std::vector<State> one{State(2.0 / (2 * 1.0), 1.0)};  // (alpha1/(2*A1), 1)
    CHECK(verify_conjugacy(cp, one) <= 1e-14);
}

TEST_CASE("grid points outside the strip are rejected") {
    const CaseParams cp = validate(CaseId(10), {1, 1, 1, 1});
    const std::vector<State> bad{State(1.5, 1.0)};  // x beyond alpha1/A1
    CHECK_THROWS_AS(verify_conjugacy(cp, bad), DomainViolation);
}

TEST_CASE("h transports f-orbits onto g-orbits for 30 steps") {
    auto rng = make_rng(333);
    for (int id : kConjugate) {
        const CaseId cid(id);
        for (int rep = 0; rep < 100; ++rep) {
            // the saturating-y case keeps its orbit interior in the A2 < 1
            // region; at A2 > 1, y underflows toward the strip boundary where
            // h degenerates in double precision
            const Region region = id == 13 ? Region::Saddle : Region::Convergent;
            const CaseParams cp = draw_params(cid, rng, region);
            State s = draw_domain_f_state(cp, rng);
            State t = h_map(cp, s);
            for (int n = 0; n < 30; ++n) {
                s = step_case(cp, s);
                t = g_map(cp, t);
                const State hs = h_map(cp, s);
                CHECK(sup_dist(hs, t) <= 1e-10 * std::max(1.0, sup_norm(t)));
            }
        }
    }
}

TEST_CASE("riccati_split separates parities") {
    const std::vector<double> u{10, 11, 12, 13, 14};
    const auto [even, odd] = riccati_split(u);
    CHECK(even == std::vector<double>{10, 12, 14});
    CHECK(odd == std::vector<double>{11, 13});
    const auto [e2, o2] = riccati_split(std::vector<double>{});
    CHECK(e2.empty());
    CHECK(o2.empty());
}

TEST_CASE("riccati_coeffs tables") {
    const RiccatiCoeffs r10 = riccati_coeffs(validate(CaseId(10), {1, 1, 3, 2}));
    CHECK(r10.a == 3.0);
    CHECK(r10.b == 0.0);
    CHECK(r10.c == 2.0);
    CHECK(r10.d == 1.0);
    CHECK(!r10.second_order);
    CHECK(!r10.linear());

    // affine second-order reduction: u' = (A1*alpha2 + alpha1)/alpha1 + (alpha2/alpha1)*u
    const RiccatiCoeffs r24 = riccati_coeffs(validate(CaseId(24), {3, 1, 1}));
    CHECK(r24.second_order);
    CHECK(r24.linear());
    CHECK(r24.eval(0.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(r24.eval(1.0) == doctest::Approx(4.0 / 3.0 + 1.0 / 3.0).epsilon(1e-15));

    const RiccatiCoeffs r22 = riccati_coeffs(validate(CaseId(22), {2, 1, 1}));
    CHECK(r22.a == 3.0);  // alpha2*A1 + alpha1
    CHECK(r22.b == 1.0);
    CHECK(r22.c == 1.0);
    CHECK(r22.d == 1.0);
    CHECK(r22.second_order);
}

TEST_CASE("second-order reductions decouple into even/odd one-step orbits") {
    auto rng = make_rng(444);
    for (int id : {3, 7, 11, 17, 22, 24, 32}) {
        const CaseId cid(id);
        CHECK(is_second_order_reduction(cid));
        for (int rep = 0; rep < 20; ++rep) {
            const CaseParams cp = draw_params(cid, rng, Region::Convergent);
            const RiccatiCoeffs phi = riccati_coeffs(cp);
            // u-orbit extracted from the lifted map: t_k = (u_{k+1}, u_k)
            State t(testsup::log_uniform(rng, 0.1, 5.0),
                    testsup::log_uniform(rng, 0.1, 5.0));
            std::vector<double> u{t.y, t.x};
            for (int k = 0; k < 40; ++k) {
                t = g_map(cp, t);
                u.push_back(t.x);
            }
            const auto [even, odd] = riccati_split(u);
            for (const auto& sub : {even, odd}) {
                for (std::size_t i = 0; i + 1 < sub.size(); ++i) {
                    const double want = phi.eval(sub[i]);
                    CHECK(std::abs(sub[i + 1] - want) <=
                          1e-12 * std::max(1.0, std::abs(want)));
                }
            }
        }
    }
    for (int id : {10, 13, 19}) CHECK(!is_second_order_reduction(CaseId(id)));
}

TEST_CASE("equilibria map to fixed pairs of g") {
    auto rng = make_rng(555);
    for (int id : kConjugate) {
        const CaseId cid(id);
        for (int rep = 0; rep < 30; ++rep) {
            // use the region whose attractor sits strictly inside the strip
            const Region region = id == 13 ? Region::Saddle : Region::Convergent;
            const CaseParams cp = draw_params(cid, rng, region);
            const EquilibriumSet eq = equilibria(cp);
            const State p = eq.kind() == EquilibriumSet::Kind::Two ? eq.interior()
                                                                   : eq.point();
            if (p.y == 0.0) continue;  // boundary equilibrium, h undefined
            const State pair = h_map(cp, p);
            CHECK(std::abs(pair.x - pair.y) <= 1e-10 * std::max(1.0, pair.x));
            const State g_pair = g_map(cp, pair);
            CHECK(sup_dist(g_pair, pair) <= 1e-10 * std::max(1.0, sup_norm(pair)));
        }
    }
}

TEST_CASE("conjugacy triple bundles the maps") {
    const ConjugacyTriple tri(validate(CaseId(7), {2, 1, 1}));
    CHECK(tri.x_max() == 2.0);
    const State s(0.5, 1.0);
    const State lifted = tri.h(s);
    const State back = tri.h_inv(tri.g(lifted));
    CHECK(sup_dist(back, tri.f(s)) <= 1e-14);
}

TEST_SUITE_END();
