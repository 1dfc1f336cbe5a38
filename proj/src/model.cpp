#include "rds11/model.hpp"

#include <cmath>

namespace rds11 {

FullParams::FullParams(double alpha1_in, double A1_in, double alpha2_in,
                       double beta2_in, double gamma2_in, double A2_in,
                       double B2_in, double C2_in)
    : alpha1(alpha1_in), A1(A1_in), alpha2(alpha2_in), beta2(beta2_in),
      gamma2(gamma2_in), A2(A2_in), B2(B2_in), C2(C2_in) {
    const double all[] = {alpha1, A1, alpha2, beta2, gamma2, A2, B2, C2};
    for (double v : all)
        if (!std::isfinite(v)) throw InvalidParameter("coefficients must be finite");
    if (!(alpha1 > 0.0) || !(A1 > 0.0))
        throw InvalidParameter("alpha1 and A1 must be positive");
    if (alpha2 < 0.0 || beta2 < 0.0 || gamma2 < 0.0 || A2 < 0.0 || B2 < 0.0 ||
        C2 < 0.0)
        throw InvalidParameter("numerator/denominator coefficients must be nonnegative");
    if (!(alpha2 + beta2 + gamma2 > 0.0))
        throw InvalidParameter("alpha2 + beta2 + gamma2 must be positive");
    if (!(A2 + B2 + C2 > 0.0))
        throw InvalidParameter("A2 + B2 + C2 must be positive");
}

FullParams embed(const CaseParams& cp) {
    const auto& v = cp.values();
    const double a1 = v[0], A1 = v[1];
    switch (cp.id().index()) {
        case 1:  return {a1, A1, v[2], 0, 0, v[3], 0, 0};    // y' = alpha2/A2
        case 2:  return {a1, A1, v[2], 0, 0, 0, 0, 1};       // y' = alpha2/y
        case 3:  return {a1, A1, v[2], 0, 0, 0, 1, 0};       // y' = alpha2/x
        case 4:  return {a1, A1, 0, 0, v[2], 1, 0, 0};       // y' = gamma2*y
        case 5:  return {a1, A1, 0, v[2], 0, 0, v[3], 0};    // y' = beta2/B2
        case 7:  return {a1, A1, 0, v[2], 0, 1, 0, 0};       // y' = beta2*x
        case 9:  return {a1, A1, 0, 0, v[2], 0, 0, v[3]};    // y' = gamma2/C2
        case 10: return {a1, A1, v[2], 0, 0, v[3], 0, 1};    // y' = alpha2/(A2+y)
        case 11: return {a1, A1, v[2], 0, 0, v[3], 1, 0};    // y' = alpha2/(A2+x)
        case 13: return {a1, A1, 0, 0, 1, v[2], 0, 1};       // y' = y/(A2+y)
        case 17: return {a1, A1, 0, 1, 0, v[2], 1, 0};       // y' = x/(A2+x)
        case 19: return {a1, A1, v[2], 0, v[3], 1, 0, 0};    // y' = alpha2+gamma2*y
        case 20: return {a1, A1, v[2], 0, v[3], 0, 0, 1};    // y' = (alpha2+gamma2*y)/y
        case 22: return {a1, A1, v[2], 1, 0, 1, 0, 0};       // y' = alpha2+x
        case 24: return {a1, A1, v[2], 1, 0, 0, 1, 0};       // y' = (alpha2+x)/x
        case 28: return {a1, A1, v[2], 0, v[3], v[4], 0, 1}; // y' = (alpha2+gamma2*y)/(A2+y)
        case 32: return {a1, A1, v[2], 1, 0, v[3], 1, 0};    // y' = (alpha2+x)/(A2+x)
    }
    throw UnknownCase("embed: unhandled case " + cp.id().label());
}

State step_general(const FullParams& p, const State& s) {
    const double den = p.A2 + p.B2 * s.x + p.C2 * s.y;
    if (den == 0.0)
        throw ZeroDenominator("y-equation denominator A2 + B2*x + C2*y is zero");
    const double xn = p.alpha1 / (p.A1 + s.y);
    const double yn = (p.alpha2 + p.beta2 * s.x + p.gamma2 * s.y) / den;
    return State(xn, yn);
}

State step_case(const CaseParams& cp, const State& s) {
    const auto& v = cp.values();
    const double xn = v[0] / (v[1] + s.y);
    double yn = 0.0;
    switch (cp.id().index()) {
        case 1:  yn = v[2] / v[3]; break;
        case 2:
            if (s.y == 0.0) throw ZeroDenominator("case 11,2: y = 0");
            yn = v[2] / s.y;
            break;
        case 3:
            if (s.x == 0.0) throw ZeroDenominator("case 11,3: x = 0");
            yn = v[2] / s.x;
            break;
        case 4:  yn = v[2] * s.y; break;
        case 5:  yn = v[2] / v[3]; break;
        case 7:  yn = v[2] * s.x; break;
        case 9:  yn = v[2] / v[3]; break;
        case 10: yn = v[2] / (v[3] + s.y); break;
        case 11: yn = v[2] / (v[3] + s.x); break;
        case 13: yn = s.y / (v[2] + s.y); break;
        case 17: yn = s.x / (v[2] + s.x); break;
        case 19: yn = v[2] + v[3] * s.y; break;
        case 20:
            if (s.y == 0.0) throw ZeroDenominator("case 11,20: y = 0");
            yn = (v[2] + v[3] * s.y) / s.y;
            break;
        case 22: yn = v[2] + s.x; break;
        case 24:
            if (s.x == 0.0) throw ZeroDenominator("case 11,24: x = 0");
            yn = (v[2] + s.x) / s.x;
            break;
        case 28: yn = (v[2] + v[3] * s.y) / (v[4] + s.y); break;
        case 32: yn = (v[2] + s.x) / (v[3] + s.x); break;
        default:
            throw UnknownCase("step_case: unhandled case " + cp.id().label());
    }
    return State(xn, yn);
}

Jacobian2 jacobian(const CaseParams& cp, const State& s) {
    const auto& v = cp.values();
    const double A1y = v[1] + s.y;
    Jacobian2 J;
    J.a11 = 0.0;  // x' = alpha1/(A1+y) has no x dependence
    J.a12 = -v[0] / (A1y * A1y);
    switch (cp.id().index()) {
        case 1:
        case 5:
        case 9:  break;  // constant y-map
        case 2:
            if (s.y == 0.0) throw ZeroDenominator("case 11,2: y = 0");
            J.a22 = -v[2] / (s.y * s.y);
            break;
        case 3:
            if (s.x == 0.0) throw ZeroDenominator("case 11,3: x = 0");
            J.a21 = -v[2] / (s.x * s.x);
            break;
        case 4:  J.a22 = v[2]; break;
        case 7:  J.a21 = v[2]; break;
        case 10: J.a22 = -v[2] / ((v[3] + s.y) * (v[3] + s.y)); break;
        case 11: J.a21 = -v[2] / ((v[3] + s.x) * (v[3] + s.x)); break;
        case 13: J.a22 = v[2] / ((v[2] + s.y) * (v[2] + s.y)); break;
        case 17: J.a21 = v[2] / ((v[2] + s.x) * (v[2] + s.x)); break;
        case 19: J.a22 = v[3]; break;
        case 20:
            if (s.y == 0.0) throw ZeroDenominator("case 11,20: y = 0");
            J.a22 = -v[2] / (s.y * s.y);
            break;
        case 22: J.a21 = 1.0; break;
        case 24:
            if (s.x == 0.0) throw ZeroDenominator("case 11,24: x = 0");
            J.a21 = -v[2] / (s.x * s.x);
            break;
        case 28: J.a22 = (v[3] * v[4] - v[2]) / ((v[4] + s.y) * (v[4] + s.y)); break;
        case 32: J.a21 = (v[3] - v[2]) / ((v[3] + s.x) * (v[3] + s.x)); break;
        default:
            throw UnknownCase("jacobian: unhandled case " + cp.id().label());
    }
    return J;
}

double step_residual(const CaseParams& cp, const State& s) {
    const State next = step_case(cp, s);
    return sup_dist(next, s) / std::max(1.0, sup_norm(s));
}

}  // namespace rds11
