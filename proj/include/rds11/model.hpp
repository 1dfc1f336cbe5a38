#pragma once

#include "rds11/core.hpp"
#include "rds11/registry.hpp"

namespace rds11 {

// ---------------------------------------------------------------------------
// The general planar rational system:
//
//   x' = alpha1 / (A1 + y)
//   y' = (alpha2 + beta2*x + gamma2*y) / (A2 + B2*x + C2*y)
//
// with alpha1, A1 > 0, the remaining coefficients >= 0,
// alpha2 + beta2 + gamma2 > 0 and A2 + B2 + C2 > 0.
// ---------------------------------------------------------------------------

struct FullParams {
    FullParams(double alpha1, double A1, double alpha2, double beta2,
               double gamma2, double A2, double B2, double C2);

    double alpha1, A1, alpha2, beta2, gamma2, A2, B2, C2;
};

/// Embed a special case into the 8-coefficient form. Absent coefficients are
/// set to 0; bare-variable denominators (e.g. y' = alpha2/y) and implicit
/// unit coefficients (e.g. y' = y/(A2+y)) get a 1, so the embedded map
/// reproduces the printed reduced form verbatim.
FullParams embed(const CaseParams& cp);

/// One step of the general system. Throws ZeroDenominator when
/// A2 + B2*x + C2*y = 0. The x-component always lies in (0, alpha1/A1].
State step_general(const FullParams& p, const State& s);

/// One step of a special case, evaluated from its printed reduced form.
/// Agrees with step_general over the embedding. Throws ZeroDenominator for
/// (11,2)/(11,20) at y = 0 and (11,3)/(11,24) at x = 0.
State step_case(const CaseParams& cp, const State& s);

/// Jacobian of step_case at s. a11 is identically zero: x' does not depend
/// on x. Throws ZeroDenominator on the same states as step_case.
Jacobian2 jacobian(const CaseParams& cp, const State& s);

/// Scaled fixed-point residual ||step_case(cp,s) - s||_inf / max(1, ||s||_inf).
double step_residual(const CaseParams& cp, const State& s);

}  // namespace rds11
