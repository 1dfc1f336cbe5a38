#include "rds11/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "rds11/model.hpp"

namespace rds11 {

namespace {

// Cycles whose sup diameter is at or below this multiple of period_tol are
// treated as not-yet-resolved fixed points rather than genuine cycles;
// without the gate, slowly converging rotational transients (the pure
// imaginary spectra of (11,7)/(11,22)) pass the sustained-cycle test at p=4
// before the convergence rule fires.
constexpr double kDegenerateCycleFactor = 100.0;

bool in_forbidden_set(const CaseSpec& spec, const State& s) {
    switch (spec.forbidden_initials) {
        case ForbiddenSet::None: return false;
        case ForbiddenSet::YZero: return s.y == 0.0;
        case ForbiddenSet::XZero: return s.x == 0.0;
    }
    return false;
}

double cycle_diameter(std::span<const State> states, std::size_t first,
                      std::size_t count) {
    double d = 0.0;
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            d = std::max(d, sup_dist(states[first + i], states[first + j]));
    return d;
}

std::string format_state(const State& s) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "(%.17g, %.17g)", s.x, s.y);
    return buf;
}

}  // namespace

void SimOptions::check() const {
    if (max_iters == 0) throw InvalidParameter("max_iters must be positive");
    if (!(conv_tol > 0.0) || !(period_tol > 0.0))
        throw InvalidParameter("tolerances must be positive");
    if (!(diverge_y > 0.0) || !(diverge_x > 0.0))
        throw InvalidParameter("divergence thresholds must be positive");
    if (window < 2) throw InvalidParameter("window must be at least 2");
}

Orbit iterate(const CaseParams& cp, const State& ic, const SimOptions& opts) {
    opts.check();
    const CaseSpec& spec = case_spec(cp.id());
    if (in_forbidden_set(spec, ic))
        throw ForbiddenInitial("initial condition " + format_state(ic) +
                               " lies in the forbidden set of case " +
                               cp.id().label() + " (" +
                               to_string(spec.forbidden_initials) + ")");

    Orbit orbit;
    orbit.states.reserve(std::min<std::size_t>(opts.max_iters + 1, 1 << 16));
    orbit.states.push_back(ic);

    int conv_run = 0;
    for (std::size_t n = 0; n < opts.max_iters; ++n) {
        const State& cur = orbit.states.back();
        // From step 1 on both coordinates are positive; an exact zero can
        // only reappear through underflow. Stop rather than divide by it.
        if (n > 0 && in_forbidden_set(spec, cur)) {
            orbit.stop_reason = Orbit::StopReason::HitForbiddenSet;
            return orbit;
        }
        const State next = step_case(cp, cur);
        orbit.states.push_back(next);

        // 1. Convergence: three consecutive sub-tolerance steps.
        conv_run = sup_dist(next, cur) <= opts.conv_tol ? conv_run + 1 : 0;
        if (conv_run >= 3) {
            orbit.stop_reason = Orbit::StopReason::Converged;
            orbit.limit = next;
            return orbit;
        }

        // 2. Periodicity: minimal p whose relation holds over 3 full cycles.
        const std::size_t len = orbit.states.size();
        for (int p = 2; p <= opts.window; ++p) {
            const std::size_t span = 3 * static_cast<std::size_t>(p);
            if (len < span + 1) break;  // longer periods need even more history
            const std::size_t newest = len - 1;
            if (sup_dist(orbit.states[newest], orbit.states[newest - p]) >
                opts.period_tol)
                continue;
            bool sustained = true;
            for (std::size_t m = newest - span; m + p <= newest; ++m) {
                if (sup_dist(orbit.states[m + p], orbit.states[m]) >
                    opts.period_tol) {
                    sustained = false;
                    break;
                }
            }
            if (!sustained) continue;
            if (cycle_diameter(orbit.states, len - p, p) <=
                kDegenerateCycleFactor * opts.period_tol)
                continue;  // collapsing onto a fixed point
            orbit.stop_reason = Orbit::StopReason::Periodic;
            orbit.period = p;
            orbit.cycle.assign(orbit.states.end() - p, orbit.states.end());
            return orbit;
        }

        // 3. Joint divergence (y, x) -> (inf, 0).
        if (next.y > opts.diverge_y && next.x < opts.diverge_x) {
            orbit.stop_reason = Orbit::StopReason::Diverged;
            return orbit;
        }
    }
    orbit.stop_reason = Orbit::StopReason::MaxIters;
    return orbit;
}

ObservedBehavior observe(const Orbit& o, const SimOptions&) {
    ObservedBehavior ob;
    switch (o.stop_reason) {
        case Orbit::StopReason::Converged:
            ob.kind = ObservedBehavior::Kind::Converged;
            ob.limit = o.limit ? o.limit : std::optional<State>(o.states.back());
            break;
        case Orbit::StopReason::Periodic:
            ob.kind = ObservedBehavior::Kind::Periodic;
            ob.period = o.period;
            ob.cycle = o.cycle;
            break;
        case Orbit::StopReason::Diverged:
            ob.kind = ObservedBehavior::Kind::Diverged;
            break;
        case Orbit::StopReason::MaxIters:
        case Orbit::StopReason::HitForbiddenSet:
            ob.kind = ObservedBehavior::Kind::Undetermined;
            break;
    }
    return ob;
}

namespace {

SampleCheck check_one(const CaseParams& cp, const BehaviorPrediction& pred,
                      const State& ic, const SimOptions& opts) {
    SampleCheck sc{ic, {}, false, ""};
    const Orbit orbit = iterate(cp, ic, opts);
    sc.observed = observe(orbit, opts);
    const double limit_tol = 10.0 * opts.conv_tol;
    using PK = BehaviorPrediction::Kind;
    using OK = ObservedBehavior::Kind;

    auto converged_to = [&](const State& target, const char* what) {
        if (sc.observed.kind != OK::Converged) {
            sc.note = std::string("expected convergence to ") + what + " " +
                      format_state(target) + ", observed " + describe(sc.observed);
            return false;
        }
        if (sup_dist(*sc.observed.limit, target) > limit_tol) {
            sc.note = std::string("limit ") + format_state(*sc.observed.limit) +
                      " is not within 10*conv_tol of " + what + " " +
                      format_state(target);
            return false;
        }
        sc.note = std::string("converged to ") + what;
        return true;
    };

    switch (pred.kind) {
        case PK::FiniteTimeEquilibrium:
        case PK::GloballyAsymptoticallyStable:
            sc.agree = converged_to(*pred.equilibrium, "equilibrium");
            break;
        case PK::EventuallyPeriodic2:
            if (sc.observed.kind == OK::Periodic && sc.observed.period == 2) {
                sc.agree = true;
                sc.note = "period-2 cycle";
            } else if (sc.observed.kind == OK::Converged) {
                // Not necessarily prime period 2: the degenerate cycle is
                // the fixed point.
                sc.agree = true;
                sc.note = "degenerate cycle (converged)";
            } else {
                sc.note = "expected period 2, observed " + describe(sc.observed);
            }
            break;
        case PK::DivergesToZeroInfinity:
            sc.agree = sc.observed.kind == OK::Diverged;
            sc.note = sc.agree ? "diverged to (0, inf)"
                               : "expected divergence, observed " +
                                     describe(sc.observed);
            break;
        case PK::SaddleWithManifold:
            if (ic.y == 0.0) {
                sc.agree = converged_to(*pred.saddle, "saddle");
            } else if (pred.interior_attractor) {
                sc.agree = converged_to(*pred.interior_attractor,
                                        "interior attractor");
            } else {
                sc.agree = sc.observed.kind == OK::Diverged;
                sc.note = sc.agree ? "off-manifold orbit diverged"
                                   : "expected divergence off the manifold, "
                                     "observed " + describe(sc.observed);
            }
            break;
        case PK::ContinuumOfEquilibria: {
            const State target(cp.alpha1() / (cp.A1() + ic.y), ic.y);
            sc.agree = converged_to(target, "continuum point");
            break;
        }
    }
    return sc;
}

}  // namespace

PredictionReport check_prediction(const CaseParams& cp, std::span<const State> ics,
                                  const SimOptions& opts) {
    opts.check();
    PredictionReport report{predict(cp), {}, true};
    report.samples.reserve(ics.size());
    for (const State& ic : ics) {
        report.samples.push_back(check_one(cp, report.prediction, ic, opts));
        report.all_agree = report.all_agree && report.samples.back().agree;
    }
    return report;
}

std::string orbit_csv(const Orbit& o) {
    std::string out = "n,x,y\n";
    char line[96];
    for (std::size_t n = 0; n < o.states.size(); ++n) {
        std::snprintf(line, sizeof(line), "%zu,%.17g,%.17g\n", n, o.states[n].x,
                      o.states[n].y);
        out += line;
    }
    return out;
}

nlohmann::json orbit_json(const Orbit& o) {
    nlohmann::json states = nlohmann::json::array();
    for (std::size_t n = 0; n < o.states.size(); ++n)
        states.push_back({{"n", n}, {"x", o.states[n].x}, {"y", o.states[n].y}});
    nlohmann::json j{{"schema", 1},
                     {"stop_reason", to_string(o.stop_reason)},
                     {"steps", o.states.size() - 1},
                     {"states", std::move(states)}};
    if (o.limit) j["limit"] = {{"x", o.limit->x}, {"y", o.limit->y}};
    if (o.stop_reason == Orbit::StopReason::Periodic) {
        j["period"] = o.period;
        nlohmann::json cyc = nlohmann::json::array();
        for (const State& s : o.cycle) cyc.push_back({{"x", s.x}, {"y", s.y}});
        j["cycle"] = std::move(cyc);
    }
    return j;
}

nlohmann::json to_json(const ObservedBehavior& ob) {
    nlohmann::json j{{"kind", to_string(ob.kind)}};
    if (ob.limit) j["limit"] = {{"x", ob.limit->x}, {"y", ob.limit->y}};
    if (ob.kind == ObservedBehavior::Kind::Periodic) j["period"] = ob.period;
    return j;
}

const char* to_string(Orbit::StopReason r) {
    switch (r) {
        case Orbit::StopReason::Converged: return "Converged";
        case Orbit::StopReason::Periodic: return "Periodic";
        case Orbit::StopReason::Diverged: return "Diverged";
        case Orbit::StopReason::MaxIters: return "MaxIters";
        case Orbit::StopReason::HitForbiddenSet: return "HitForbiddenSet";
    }
    return "?";
}

const char* to_string(ObservedBehavior::Kind k) {
    switch (k) {
        case ObservedBehavior::Kind::Converged: return "Converged";
        case ObservedBehavior::Kind::Periodic: return "Periodic";
        case ObservedBehavior::Kind::Diverged: return "Diverged";
        case ObservedBehavior::Kind::Undetermined: return "Undetermined";
    }
    return "?";
}

std::string describe(const ObservedBehavior& ob) {
    if (ob.kind == ObservedBehavior::Kind::Periodic)
        return "Periodic(" + std::to_string(ob.period) + ")";
    return to_string(ob.kind);
}

}  // namespace rds11
