#pragma once

#include "rds11/core.hpp"
#include "rds11/registry.hpp"
#include "rds11/stability.hpp"

namespace rds11 {

// ---------------------------------------------------------------------------
// Brute-force cross-checks, deliberately independent of the closed forms in
// equilibria/stability: everything here uses step_case and generic numerics
// only. Slow is fine; these exist to catch formula transcription errors.
// ---------------------------------------------------------------------------

struct OracleOptions {
    std::size_t max_iters = 2000000;
    double tol = 1e-13;  // sup step difference, 3 consecutive hits
};

/// Limit of plain iteration from ic. Throws NoConvergence when the orbit
/// does not settle within the budget (e.g. divergence regions).
State fixed_point_by_iteration(const CaseParams& cp, State ic,
                               const OracleOptions& opts = {});

/// Eigenvalues of the finite-difference Jacobian at eq. Falls back to a
/// one-sided difference when a coordinate sits within the step of zero.
Spectrum eigen_by_finite_difference(const CaseParams& cp, const State& eq,
                                    double step = 1e-6);

}  // namespace rds11
