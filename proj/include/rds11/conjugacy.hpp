#pragma once

#include <span>
#include <utility>
#include <vector>

#include "rds11/core.hpp"
#include "rds11/registry.hpp"

namespace rds11 {

// ---------------------------------------------------------------------------
// Change-of-variables machinery. Ten cases come with a planar conjugacy
//
//   h((x,y)) = (y, alpha1/x - A1)        on (0, alpha1/A1) x (0, inf)
//   h_inv((x,y)) = (alpha1/(A1+y), x)    on (0, inf)^2
//   h_inv . g . h = f
//
// where g is the case's scalar reduction written as a first-order map on
// pairs (current, previous). The reduction is either first order in u
// ((11,10), (11,13), (11,19): g reads the first slot) or second order
// ((11,3), (11,7), (11,11), (11,17), (11,22), (11,24), (11,32): g reads the
// second slot, and the u-sequence decouples into even/odd Riccati orbits).
//
// The other seven cases have constant or autonomous y-dynamics and no lifted
// map; their operations throw NotConjugateCase.
// ---------------------------------------------------------------------------

/// True for the ten cases with a lifted map g.
bool is_conjugate_case(CaseId id);

/// True when the scalar reduction advances u_{n+1} from u_{n-1}, so the
/// orbit splits into even/odd one-step subsequences.
bool is_second_order_reduction(CaseId id);

/// h((x,y)) = (y, alpha1/x - A1). Throws DomainViolation off
/// (0, alpha1/A1) x (0, inf).
State h_map(const CaseParams& cp, const State& s);

/// h_inv((x,y)) = (alpha1/(A1+y), x). Throws DomainViolation off (0, inf)^2.
State h_inv_map(const CaseParams& cp, const State& t);

/// The case's lifted map on (0, inf)^2, exactly as displayed (nested
/// fractions and all). Throws NotConjugateCase / DomainViolation.
State g_map(const CaseParams& cp, const State& t);

/// Max over the grid of ||h_inv(g(h(s))) - f(s)||_inf scaled by
/// max(1, ||.||_inf) of the compared states. Grid points must lie in
/// domain_f; throws DomainViolation otherwise, NotConjugateCase for the
/// autonomous cases.
double verify_conjugacy(const CaseParams& cp, std::span<const State> grid);

/// Even- and odd-index subsequences of a scalar orbit.
std::pair<std::vector<double>, std::vector<double>> riccati_split(
    std::span<const double> u_orbit);

/// Coefficients of the decoupled one-step map phi(u) = (a + b*u)/(c + d*u).
/// Linear/affine reductions ((11,3), (11,19), (11,24)) have d = 0.
struct RiccatiCoeffs {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
    bool second_order = false;

    bool linear() const noexcept { return d == 0.0; }
    double eval(double u) const;
};

RiccatiCoeffs riccati_coeffs(const CaseParams& cp);

/// Bundle of the four maps with their domains, for callers that want the
/// conjugacy as one object.
class ConjugacyTriple {
public:
    explicit ConjugacyTriple(CaseParams cp);

    const CaseParams& params() const noexcept { return cp_; }
    /// domain_f = (0, x_max) x (0, inf)
    double x_max() const noexcept { return x_max_; }

    State f(const State& s) const;
    State g(const State& t) const { return g_map(cp_, t); }
    State h(const State& s) const { return h_map(cp_, s); }
    State h_inv(const State& t) const { return h_inv_map(cp_, t); }

private:
    CaseParams cp_;
    double x_max_;
};

/// Log-spaced grid inside domain_f, nx by ny points, with y spanning
/// [y_lo, y_hi]. Convenience for verify_conjugacy callers.
std::vector<State> domain_grid(const CaseParams& cp, int nx, int ny,
                               double y_lo = 1e-3, double y_hi = 1e3);

}  // namespace rds11
