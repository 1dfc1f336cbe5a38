#include "rds11/equilibria.hpp"

#include <cmath>
#include <stdexcept>

namespace rds11 {

EquilibriumSet EquilibriumSet::none() { return {}; }

EquilibriumSet EquilibriumSet::one(State p) {
    EquilibriumSet e;
    e.kind_ = Kind::One;
    e.pts_ = {p};
    return e;
}

EquilibriumSet EquilibriumSet::two(State saddle, State interior) {
    EquilibriumSet e;
    e.kind_ = Kind::Two;
    e.pts_ = {saddle, interior};
    return e;
}

EquilibriumSet EquilibriumSet::continuum(double alpha1, double A1) {
    EquilibriumSet e;
    e.kind_ = Kind::Continuum;
    e.alpha1_ = alpha1;
    e.A1_ = A1;
    return e;
}

const State& EquilibriumSet::point() const {
    if (kind_ != Kind::One) throw std::logic_error("equilibrium set is not One");
    return pts_[0];
}

const State& EquilibriumSet::saddle() const {
    if (kind_ != Kind::Two) throw std::logic_error("equilibrium set is not Two");
    return pts_[0];
}

const State& EquilibriumSet::interior() const {
    if (kind_ != Kind::Two) throw std::logic_error("equilibrium set is not Two");
    return pts_[1];
}

State EquilibriumSet::continuum_at(double v) const {
    if (kind_ != Kind::Continuum)
        throw std::logic_error("equilibrium set is not a continuum");
    if (!(v >= 0.0) || !std::isfinite(v))
        throw DomainViolation("continuum parameter must be a nonnegative real");
    return State(alpha1_ / (A1_ + v), v);
}

double positive_quadratic_root(double a, double b, double c) {
    const double sq = std::sqrt(b * b + 4.0 * a * c);
    return b >= 0.0 ? (2.0 * c) / (b + sq) : (sq - b) / (2.0 * a);
}

EquilibriumSet equilibria(const CaseParams& cp) {
    const auto& v = cp.values();
    const double a1 = v[0], A1 = v[1];
    // x is pinned to alpha1/(A1+y), so once ybar is known the first
    // coordinate follows; evaluating it that way also matches the orbit's
    // arithmetic bit for bit once y settles.
    const auto from_y = [&](double ybar) { return State(a1 / (A1 + ybar), ybar); };

    switch (cp.id().index()) {
        case 1:  return EquilibriumSet::one(from_y(v[2] / v[3]));
        case 2:  return EquilibriumSet::one(from_y(std::sqrt(v[2])));
        case 3: {
            // ybar = alpha2*A1/(alpha1-alpha2); no nonnegative root at
            // alpha1 <= alpha2.
            const double a2 = v[2];
            if (a1 <= a2) return EquilibriumSet::none();
            return EquilibriumSet::one(from_y(a2 * A1 / (a1 - a2)));
        }
        case 4: {
            const double g2 = v[2];
            if (g2 == 1.0) return EquilibriumSet::continuum(a1, A1);
            return EquilibriumSet::one(from_y(0.0));
        }
        case 5:  return EquilibriumSet::one(from_y(v[2] / v[3]));
        case 7:  // ybar^2 + A1*ybar - beta2*alpha1 = 0
            return EquilibriumSet::one(from_y(positive_quadratic_root(1.0, A1, v[2] * a1)));
        case 9:  return EquilibriumSet::one(from_y(v[2] / v[3]));
        case 10: // ybar^2 + A2*ybar - alpha2 = 0
            return EquilibriumSet::one(from_y(positive_quadratic_root(1.0, v[3], v[2])));
        case 11: {
            // A1*xbar^2 + (A1*A2 + alpha2 - alpha1)*xbar - alpha1*A2 = 0
            const double a2 = v[2], A2 = v[3];
            const double xbar = positive_quadratic_root(A1, A1 * A2 + a2 - a1, a1 * A2);
            return EquilibriumSet::one(State(xbar, a2 / (A2 + xbar)));
        }
        case 13: {
            const double A2 = v[2];
            if (A2 >= 1.0) return EquilibriumSet::one(from_y(0.0));
            return EquilibriumSet::two(from_y(0.0), from_y(1.0 - A2));
        }
        case 17: {
            // (A1+1)*xbar^2 + (A1*A2 - alpha1)*xbar - alpha1*A2 = 0
            const double A2 = v[2];
            const double xbar = positive_quadratic_root(A1 + 1.0, A1 * A2 - a1, a1 * A2);
            return EquilibriumSet::one(State(xbar, xbar / (A2 + xbar)));
        }
        case 19: {
            const double a2 = v[2], g2 = v[3];
            if (g2 >= 1.0) return EquilibriumSet::none();
            return EquilibriumSet::one(from_y(a2 / (1.0 - g2)));
        }
        case 20: // ybar^2 - gamma2*ybar - alpha2 = 0
            return EquilibriumSet::one(from_y(positive_quadratic_root(1.0, -v[3], v[2])));
        case 22: {
            // xbar^2 + (alpha2+A1)*xbar - alpha1 = 0, ybar = alpha2 + xbar
            const double a2 = v[2];
            const double xbar = positive_quadratic_root(1.0, a2 + A1, a1);
            return EquilibriumSet::one(State(xbar, a2 + xbar));
        }
        case 24: {
            const double a2 = v[2];
            if (a1 <= a2) return EquilibriumSet::none();
            return EquilibriumSet::one(
                State((a1 - a2) / (A1 + 1.0), (a1 + a2 * A1) / (a1 - a2)));
        }
        case 28: // ybar^2 + (A2-gamma2)*ybar - alpha2 = 0
            return EquilibriumSet::one(
                from_y(positive_quadratic_root(1.0, v[4] - v[3], v[2])));
        case 32: {
            // (1+A1)*xbar^2 + (A1*A2 + alpha2 - alpha1)*xbar - alpha1*A2 = 0
            const double a2 = v[2], A2 = v[3];
            const double xbar =
                positive_quadratic_root(1.0 + A1, A1 * A2 + a2 - a1, a1 * A2);
            return EquilibriumSet::one(State(xbar, (a2 + xbar) / (A2 + xbar)));
        }
    }
    throw UnknownCase("equilibria: unhandled case " + cp.id().label());
}

const char* to_string(EquilibriumSet::Kind kind) {
    switch (kind) {
        case EquilibriumSet::Kind::None: return "None";
        case EquilibriumSet::Kind::One: return "One";
        case EquilibriumSet::Kind::Two: return "Two";
        case EquilibriumSet::Kind::Continuum: return "Continuum";
    }
    return "?";
}

}  // namespace rds11
