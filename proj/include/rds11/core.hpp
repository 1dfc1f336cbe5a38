#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>

namespace rds11 {

// ---------------------------------------------------------------------------
// Error hierarchy. Every library error derives from Error so callers can
// catch the whole family or individual conditions.
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A map denominator evaluated to zero at the given state.
struct ZeroDenominator : Error {
    using Error::Error;
};

/// Case index is not one of the 17 Riccati-reducible cases.
struct UnknownCase : Error {
    using Error::Error;
};

/// Parameter list length does not match the case signature.
struct ArityMismatch : Error {
    using Error::Error;
};

/// A case parameter was zero, negative, or non-finite.
struct NonPositiveParameter : Error {
    NonPositiveParameter(std::string symbol_in, const std::string& msg)
        : Error(msg), symbol(std::move(symbol_in)) {}
    std::string symbol;
};

/// General parameter-validation failure (full 8-coefficient form).
struct InvalidParameter : Error {
    using Error::Error;
};

/// State lies outside the open domain required by the operation.
struct DomainViolation : Error {
    using Error::Error;
};

/// The case has autonomous y-dynamics and no planar conjugacy.
struct NotConjugateCase : Error {
    using Error::Error;
};

/// The supplied state does not satisfy the fixed-point residual bound.
struct NotAFixedPoint : Error {
    using Error::Error;
};

/// Initial condition lies in the case's forbidden set.
struct ForbiddenInitial : Error {
    using Error::Error;
};

/// Iteration did not settle within the step budget.
struct NoConvergence : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// State: a point (x, y) in the nonnegative quadrant. Validated on
// construction; NaN/infinite coordinates are rejected rather than propagated.
// ---------------------------------------------------------------------------

struct State {
    State(double x_in, double y_in) : x(x_in), y(y_in) {
        if (!std::isfinite(x) || !std::isfinite(y))
            throw DomainViolation("state coordinates must be finite");
        if (x < 0.0 || y < 0.0)
            throw DomainViolation("state coordinates must be nonnegative");
    }

    double x;
    double y;

    friend bool operator==(const State&, const State&) = default;
};

/// Sup-norm distance between two states.
inline double sup_dist(const State& a, const State& b) {
    return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

/// Sup norm of a state.
inline double sup_norm(const State& s) {
    return std::max(std::abs(s.x), std::abs(s.y));
}

// ---------------------------------------------------------------------------
// Jacobian of the planar map, row-major 2x2.
// ---------------------------------------------------------------------------

struct Jacobian2 {
    double a11 = 0.0;
    double a12 = 0.0;
    double a21 = 0.0;
    double a22 = 0.0;

    double trace() const { return a11 + a22; }
    double det() const { return a11 * a22 - a12 * a21; }
};

// ---------------------------------------------------------------------------
// CaseId: one of the 17 Riccati-reducible special cases, by index.
// ---------------------------------------------------------------------------

class CaseId {
public:
    explicit CaseId(int index) : index_(index) {
        if (!is_valid(index))
            throw UnknownCase("unknown case index " + std::to_string(index) +
                              " (not one of the 17 Riccati-reducible cases)");
    }

    int index() const noexcept { return index_; }

    /// Display label, e.g. "11,7".
    std::string label() const { return "11," + std::to_string(index_); }

    static bool is_valid(int index) noexcept {
        for (int i : indices())
            if (i == index) return true;
        return false;
    }

    /// The 17 valid case indices in ascending order.
    static std::span<const int> indices() noexcept {
        static constexpr std::array<int, 17> k = {1,  2,  3,  4,  5,  7,  9, 10, 11,
                                                  13, 17, 19, 20, 22, 24, 28, 32};
        return k;
    }

    friend bool operator==(const CaseId&, const CaseId&) = default;
    friend auto operator<=>(const CaseId&, const CaseId&) = default;

private:
    int index_;
};

}  // namespace rds11
