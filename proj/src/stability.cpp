#include "rds11/stability.hpp"

#include <cmath>
#include <utility>

#include "rds11/equilibria.hpp"
#include "rds11/model.hpp"

namespace rds11 {

namespace {

Spectrum sorted(std::complex<double> u, std::complex<double> w) {
    if (std::abs(u) > std::abs(w)) std::swap(u, w);
    return Spectrum{u, w};
}

// Roots of lambda^2 = c for the x-coupled cases: real pair for c >= 0,
// purely imaginary pair otherwise.
Spectrum pm_pair(double c) {
    if (c >= 0.0) {
        const double r = std::sqrt(c);
        return sorted({-r, 0.0}, {r, 0.0});
    }
    const double r = std::sqrt(-c);
    return sorted({0.0, -r}, {0.0, r});
}

Spectrum zero_and(double a22) { return sorted({0.0, 0.0}, {a22, 0.0}); }

void require_fixed_point(const CaseParams& cp, const State& eq) {
    const double r = step_residual(cp, eq);
    if (!(r <= kFixedPointResidual))
        throw NotAFixedPoint("state is not a fixed point of case " +
                             cp.id().label() + " (scaled residual " +
                             std::to_string(r) + ")");
}

}  // namespace

Spectrum spectrum_from_trace_det(double tr, double det) {
    const double disc = tr * tr - 4.0 * det;
    if (disc >= 0.0) {
        const double sq = std::sqrt(disc);
        // Larger-magnitude root first, cofactor for the other: avoids
        // cancellation when tr dominates.
        if (tr == 0.0 && sq == 0.0) return Spectrum{{0.0, 0.0}, {0.0, 0.0}};
        const double big = (tr >= 0.0 ? tr + sq : tr - sq) / 2.0;
        const double small = big == 0.0 ? 0.0 : det / big;
        return sorted({small, 0.0}, {big, 0.0});
    }
    const double re = tr / 2.0;
    const double im = std::sqrt(-disc) / 2.0;
    return sorted({re, -im}, {re, im});
}

Spectrum spectrum_numeric(const CaseParams& cp, const State& eq) {
    require_fixed_point(cp, eq);
    const Jacobian2 J = jacobian(cp, eq);
    return spectrum_from_trace_det(J.trace(), J.det());
}

Spectrum spectrum_closed(const CaseParams& cp, const State& eq) {
    require_fixed_point(cp, eq);
    const auto& v = cp.values();
    const double A1 = v[1];
    const double xbar = eq.x, ybar = eq.y;
    switch (cp.id().index()) {
        case 1:
        case 5:
        case 9:  return zero_and(0.0);
        case 2:  return zero_and(-1.0);                        // lambda^2 + lambda = 0
        case 3:  return pm_pair(v[2] / v[0]);                  // +-sqrt(alpha2/alpha1)
        case 4:  return zero_and(v[2]);                        // {0, gamma2}
        case 7:  return pm_pair(-ybar / (A1 + ybar));
        case 10: return zero_and(-ybar / (v[3] + ybar));
        case 11: return pm_pair(xbar * ybar / ((A1 + ybar) * (v[3] + xbar)));
        case 13: return zero_and((1.0 - ybar) / (v[2] + ybar));
        case 17: return pm_pair(-v[2] * ybar / ((A1 + ybar) * (v[2] + xbar)));
        case 19: return zero_and(v[3]);                        // {0, gamma2}
        case 20: return zero_and((v[3] - ybar) / ybar);
        case 22: return pm_pair(-xbar / (A1 + ybar));
        case 24: return pm_pair((ybar - 1.0) / (A1 + ybar));   // lambda^2 + (1-ybar)/(A1+ybar) = 0
        case 28: return zero_and((v[3] - ybar) / (v[4] + ybar));
        case 32: // derived from the a11 = 0 determinant pattern; not displayed
            return pm_pair(xbar * (ybar - 1.0) / ((A1 + ybar) * (v[3] + xbar)));
    }
    throw UnknownCase("spectrum_closed: unhandled case " + cp.id().label());
}

LocalClass classify_local(const Spectrum& s, double tol) {
    const double m1 = std::abs(s.lambda1);
    const double m2 = std::abs(s.lambda2);
    if (std::abs(m1 - 1.0) <= tol || std::abs(m2 - 1.0) <= tol)
        return LocalClass::Nonhyperbolic;
    if (m1 < 1.0 && m2 < 1.0) return LocalClass::LocallyAsymptoticallyStable;
    if (m1 < 1.0 && m2 > 1.0) return LocalClass::Saddle;
    return LocalClass::Unstable;
}

const char* to_string(LocalClass c) {
    switch (c) {
        case LocalClass::LocallyAsymptoticallyStable:
            return "LocallyAsymptoticallyStable";
        case LocalClass::Saddle: return "Saddle";
        case LocalClass::Nonhyperbolic: return "Nonhyperbolic";
        case LocalClass::Unstable: return "Unstable";
    }
    return "?";
}

}  // namespace rds11
