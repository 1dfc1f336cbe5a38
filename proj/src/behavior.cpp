#include "rds11/behavior.hpp"

namespace rds11 {

namespace {

BehaviorPrediction finite_time(const CaseParams& cp, int steps) {
    BehaviorPrediction p;
    p.kind = BehaviorPrediction::Kind::FiniteTimeEquilibrium;
    p.within_steps = steps;
    p.equilibrium = equilibria(cp).point();
    p.region_note = "all admissible parameters";
    return p;
}

BehaviorPrediction gas(State eq, std::string region) {
    BehaviorPrediction p;
    p.kind = BehaviorPrediction::Kind::GloballyAsymptoticallyStable;
    p.equilibrium = eq;
    p.region_note = std::move(region);
    return p;
}

BehaviorPrediction diverges(std::string region) {
    BehaviorPrediction p;
    p.kind = BehaviorPrediction::Kind::DivergesToZeroInfinity;
    p.region_note = std::move(region);
    return p;
}

BehaviorPrediction saddle_with_manifold(State saddle, std::optional<State> interior,
                                        std::string region) {
    BehaviorPrediction p;
    p.kind = BehaviorPrediction::Kind::SaddleWithManifold;
    p.saddle = saddle;
    p.interior_attractor = interior;
    p.manifold = "y = 0 axis";
    p.region_note = std::move(region);
    return p;
}

}  // namespace

BehaviorPrediction predict(const CaseParams& cp) {
    const auto& v = cp.values();
    switch (cp.id().index()) {
        case 1:
        case 5:
        case 9:  return finite_time(cp, 2);
        case 2: {
            BehaviorPrediction p;
            p.kind = BehaviorPrediction::Kind::EventuallyPeriodic2;
            p.region_note = "all admissible parameters";
            // Period 2 is not necessarily prime: y0 = sqrt(alpha2) sits on
            // the fixed point and the cycle degenerates.
            return p;
        }
        case 3:
            if (v[0] > v[2]) return gas(equilibria(cp).point(), "alpha1 > alpha2");
            return diverges("alpha1 <= alpha2");
        case 4: {
            const double g2 = v[2];
            if (g2 > 1.0)
                return saddle_with_manifold(State(v[0] / v[1], 0.0), std::nullopt,
                                            "gamma2 > 1");
            if (g2 == 1.0) {
                BehaviorPrediction p;
                p.kind = BehaviorPrediction::Kind::ContinuumOfEquilibria;
                p.region_note = "gamma2 = 1";
                return p;
            }
            return gas(equilibria(cp).point(), "gamma2 < 1");
        }
        case 7:  return gas(equilibria(cp).point(), "all admissible parameters");
        case 10: return gas(equilibria(cp).point(), "all admissible parameters");
        case 11: return gas(equilibria(cp).point(), "all admissible parameters");
        case 13: {
            const EquilibriumSet eq = equilibria(cp);
            if (v[2] >= 1.0) return gas(eq.point(), "A2 >= 1");
            return saddle_with_manifold(eq.saddle(), eq.interior(), "A2 < 1");
        }
        case 17: return gas(equilibria(cp).point(), "all admissible parameters");
        case 19:
            if (v[3] < 1.0) return gas(equilibria(cp).point(), "gamma2 < 1");
            return diverges("gamma2 >= 1");
        case 20: return gas(equilibria(cp).point(), "all admissible parameters");
        case 22: return gas(equilibria(cp).point(), "all admissible parameters");
        case 24:
            if (v[0] > v[2]) return gas(equilibria(cp).point(), "alpha1 > alpha2");
            return diverges("alpha1 <= alpha2");
        case 28: return gas(equilibria(cp).point(), "all admissible parameters");
        case 32: return gas(equilibria(cp).point(), "all admissible parameters");
    }
    throw UnknownCase("predict: unhandled case " + cp.id().label());
}

nlohmann::json to_json(const BehaviorPrediction& p) {
    nlohmann::json j{{"kind", to_string(p.kind)}, {"region", p.region_note}};
    auto put_state = [&j](const char* key, const State& s) {
        j[key] = {{"x", s.x}, {"y", s.y}};
    };
    if (p.kind == BehaviorPrediction::Kind::FiniteTimeEquilibrium)
        j["within_steps"] = p.within_steps;
    if (p.equilibrium) put_state("equilibrium", *p.equilibrium);
    if (p.saddle) put_state("saddle", *p.saddle);
    if (p.interior_attractor) put_state("interior_attractor", *p.interior_attractor);
    if (!p.manifold.empty()) j["stable_manifold"] = p.manifold;
    return j;
}

const char* to_string(BehaviorPrediction::Kind kind) {
    using K = BehaviorPrediction::Kind;
    switch (kind) {
        case K::FiniteTimeEquilibrium: return "FiniteTimeEquilibrium";
        case K::EventuallyPeriodic2: return "EventuallyPeriodic2";
        case K::GloballyAsymptoticallyStable: return "GloballyAsymptoticallyStable";
        case K::DivergesToZeroInfinity: return "DivergesToZeroInfinity";
        case K::SaddleWithManifold: return "SaddleWithManifold";
        case K::ContinuumOfEquilibria: return "ContinuumOfEquilibria";
    }
    return "?";
}

}  // namespace rds11
