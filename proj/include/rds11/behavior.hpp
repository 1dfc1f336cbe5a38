#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "rds11/core.hpp"
#include "rds11/equilibria.hpp"
#include "rds11/registry.hpp"

namespace rds11 {

// ---------------------------------------------------------------------------
// The per-case parameter-region tables: what each theorem claims happens,
// as a deterministic function of (case, params). Boundary inclusivity is
// copied verbatim from the statements: (11,3)/(11,24) diverge at
// alpha1 <= alpha2, (11,19) diverges at gamma2 >= 1, (11,13) is globally
// stable at A2 >= 1. No epsilon bands.
// ---------------------------------------------------------------------------

struct BehaviorPrediction {
    enum class Kind {
        FiniteTimeEquilibrium,
        EventuallyPeriodic2,
        GloballyAsymptoticallyStable,
        DivergesToZeroInfinity,
        SaddleWithManifold,
        ContinuumOfEquilibria,
    };

    Kind kind;
    /// FiniteTimeEquilibrium: the orbit equals the equilibrium from this step.
    int within_steps = 0;
    /// Target for FiniteTimeEquilibrium / GloballyAsymptoticallyStable.
    std::optional<State> equilibrium;
    /// SaddleWithManifold: the saddle and, when present ((11,13) A2 < 1),
    /// the interior attractor for y0 > 0; (11,4) gamma2 > 1 has none.
    std::optional<State> saddle;
    std::optional<State> interior_attractor;
    std::string manifold;     // "y = 0 axis" for saddle kinds
    std::string region_note;  // inequality that selected the region
};

BehaviorPrediction predict(const CaseParams& cp);

nlohmann::json to_json(const BehaviorPrediction& p);

const char* to_string(BehaviorPrediction::Kind kind);

}  // namespace rds11
