#pragma once

#include <optional>
#include <vector>

#include "rds11/core.hpp"
#include "rds11/registry.hpp"

namespace rds11 {

// ---------------------------------------------------------------------------
// Closed-form equilibrium sets. Four shapes occur across the 17 cases:
//   None       (11,3)/(11,24) with alpha1 <= alpha2; (11,19) with gamma2 >= 1
//   One        the generic outcome
//   Two        (11,13) with A2 < 1: axis saddle plus interior attractor
//   Continuum  (11,4) with gamma2 = 1: v -> (alpha1/(A1+v), v), v in [0, inf)
// Region boundaries are classified with exact floating comparison; the
// theorems draw sharp lines and no tolerance band is applied.
// ---------------------------------------------------------------------------

class EquilibriumSet {
public:
    enum class Kind { None, One, Two, Continuum };

    static EquilibriumSet none();
    static EquilibriumSet one(State p);
    static EquilibriumSet two(State saddle, State interior);
    static EquilibriumSet continuum(double alpha1, double A1);

    Kind kind() const noexcept { return kind_; }

    const State& point() const;     // One
    const State& saddle() const;    // Two
    const State& interior() const;  // Two

    /// Continuum member at parameter v >= 0.
    State continuum_at(double v) const;

    /// All isolated equilibria (empty for None and Continuum).
    const std::vector<State>& isolated_points() const noexcept { return pts_; }

private:
    Kind kind_ = Kind::None;
    std::vector<State> pts_;
    double alpha1_ = 0.0, A1_ = 0.0;
};

/// The case's equilibrium set for this parameter point, evaluated from the
/// closed forms with cancellation-free quadratic roots.
EquilibriumSet equilibria(const CaseParams& cp);

/// Positive root of a*t^2 + b*t - c = 0 with a > 0, c > 0 (one sign change).
/// Uses the conjugate form 2c/(b + sqrt(b^2+4ac)) when b >= 0 so the
/// difference of nearly equal terms never cancels.
double positive_quadratic_root(double a, double b, double c);

const char* to_string(EquilibriumSet::Kind kind);

}  // namespace rds11
