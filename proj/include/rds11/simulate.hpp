#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "rds11/behavior.hpp"
#include "rds11/core.hpp"
#include "rds11/registry.hpp"

namespace rds11 {

struct SimOptions {
    std::size_t max_iters = 100000;
    double conv_tol = 1e-9;    // sup step difference, 3 consecutive hits
    double period_tol = 1e-9;  // sup cycle difference, sustained 3 cycles
    double diverge_y = 1e10;   // divergence needs y above this ...
    double diverge_x = 1e-10;  // ... and x below this, simultaneously
    int window = 8;            // largest period searched

    void check() const;  // throws InvalidParameter on a bad field
};

struct Orbit {
    enum class StopReason { Converged, Periodic, Diverged, MaxIters, HitForbiddenSet };

    std::vector<State> states;  // states[0] is the initial condition
    StopReason stop_reason = StopReason::MaxIters;
    std::optional<State> limit;  // Converged
    int period = 0;              // Periodic: minimal p in [2, window]
    std::vector<State> cycle;    // Periodic: the last p states
};

/// Iterate step_case from ic until one of the stopping rules fires:
/// convergence (3 consecutive steps with sup difference <= conv_tol),
/// periodicity (minimal p <= window sustained for 3 cycles, cycle diameter
/// above the degeneracy floor), or joint divergence (y > diverge_y with
/// x < diverge_x). Near-fixed-point cycles fall through to the convergence
/// rule, so a degenerate period 2 reports Converged. Throws ForbiddenInitial
/// when ic sits in the case's forbidden set.
Orbit iterate(const CaseParams& cp, const State& ic, const SimOptions& opts = {});

struct ObservedBehavior {
    enum class Kind { Converged, Periodic, Diverged, Undetermined };

    Kind kind = Kind::Undetermined;
    std::optional<State> limit;  // Converged
    int period = 0;              // Periodic
    std::vector<State> cycle;    // Periodic
};

/// Collapse an orbit's stop reason into an observation. MaxIters and
/// HitForbiddenSet map to Undetermined.
ObservedBehavior observe(const Orbit& o, const SimOptions& opts = {});

/// One initial condition's worth of cross-checking.
struct SampleCheck {
    State ic;
    ObservedBehavior observed;
    bool agree = false;
    std::string note;  // why it disagreed, or which branch matched
};

struct PredictionReport {
    BehaviorPrediction prediction;
    std::vector<SampleCheck> samples;
    bool all_agree = false;
};

/// Simulate every initial condition and compare against predict(cp).
/// Converged limits must land within 10*conv_tol of the predicted target;
/// for saddle predictions, y0 = 0 samples must reach the saddle and y0 > 0
/// samples the interior attractor (or diverge when there is none).
/// Converged counts as compatible with EventuallyPeriodic2.
PredictionReport check_prediction(const CaseParams& cp, std::span<const State> ics,
                                  const SimOptions& opts = {});

/// CSV with header n,x,y.
std::string orbit_csv(const Orbit& o);

/// JSON document (schema 1) with states and stop metadata.
nlohmann::json orbit_json(const Orbit& o);

nlohmann::json to_json(const ObservedBehavior& ob);

const char* to_string(Orbit::StopReason r);
const char* to_string(ObservedBehavior::Kind k);

/// Compact display, e.g. "Converged", "Periodic(2)".
std::string describe(const ObservedBehavior& ob);

}  // namespace rds11
