#pragma once

#include <complex>

#include "rds11/core.hpp"
#include "rds11/registry.hpp"

namespace rds11 {

/// Eigenvalues of the linearization, sorted so |lambda1| <= |lambda2|.
struct Spectrum {
    std::complex<double> lambda1;
    std::complex<double> lambda2;
};

enum class LocalClass {
    LocallyAsymptoticallyStable,
    Saddle,
    Nonhyperbolic,
    Unstable,
};

/// Default tolerance on | |lambda| - 1 | below which an eigenvalue counts as
/// on the unit circle. Overridable per call in classify_local.
inline constexpr double kNonhyperbolicTol = 1e-9;

/// Residual bound defining "is a fixed point" for the spectrum operations.
inline constexpr double kFixedPointResidual = 1e-8;

/// Eigenvalues of the 2x2 Jacobian at eq via the trace/determinant closed
/// form. Throws NotAFixedPoint when the scaled step residual exceeds 1e-8.
Spectrum spectrum_numeric(const CaseParams& cp, const State& eq);

/// The case's closed-form spectrum at eq. Since x' never depends on x, the
/// characteristic polynomial is always lambda^2 - a22*lambda - a12*a21:
/// y-autonomous cases give {0, a22}, x-coupled cases give a plus/minus pair
/// (real or purely imaginary). For (11,32), which has no displayed closed
/// form, the same determinant pattern as (11,11)/(11,17) is used.
Spectrum spectrum_closed(const CaseParams& cp, const State& eq);

/// Classification by eigenvalue moduli.
LocalClass classify_local(const Spectrum& s, double tol = kNonhyperbolicTol);

/// Build a modulus-sorted spectrum from trace and determinant.
Spectrum spectrum_from_trace_det(double tr, double det);

const char* to_string(LocalClass c);

}  // namespace rds11
