#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rds11/core.hpp"

namespace rds11 {

/// Structural family of the y-update. Constant covers (11,1)/(11,5)/(11,9);
/// RiccatiY covers both (11,10) and (11,28), the latter being the full
/// (alpha2 + gamma2*y)/(A2 + y) member of the same family.
enum class YMapKind {
    Constant,
    ReciprocalY,
    ReciprocalX,
    LinearY,
    LinearX,
    RiccatiY,
    RiccatiXnum,
    RiccatiXfull,
    AffineY,
    AffineX,
    RatioY,
    RatioX,
    SaturatingY,
    SaturatingX,
};

/// Initial conditions excluded so the first step is defined. Every later
/// state has both coordinates positive, so only (x0, y0) needs constraining.
enum class ForbiddenSet { None, YZero, XZero };

struct CaseSpec {
    CaseId id;
    std::vector<std::string> param_names;  // ordered as in the case signature
    YMapKind y_map_kind;
    ForbiddenSet forbidden_initials;
    std::string reduced_form;  // y-update in display form, e.g. "alpha2/(A2 + y)"
};

/// Static signature table lookup. Total over the 17 ids; throws UnknownCase
/// if constructed CaseId were bypassed (defensive, cannot happen via CaseId).
const CaseSpec& case_spec(CaseId id);

/// All 17 case specs in ascending index order.
std::span<const CaseSpec> all_case_specs();

// ---------------------------------------------------------------------------
// CaseParams: the positive coefficients of one special case, ordered exactly
// as in the case signature. Construction validates arity and positivity.
// ---------------------------------------------------------------------------

class CaseParams {
public:
    CaseParams(CaseId id, std::vector<double> values);

    CaseId id() const noexcept { return id_; }
    const std::vector<double>& values() const noexcept { return values_; }

    double operator[](std::size_t i) const { return values_.at(i); }

    /// alpha1 and A1 occupy slots 0 and 1 in every case signature.
    double alpha1() const noexcept { return values_[0]; }
    double A1() const noexcept { return values_[1]; }

    /// Value of a named symbol, e.g. "gamma2". Throws ArityMismatch if the
    /// symbol is not in this case's signature.
    double value_of(std::string_view symbol) const;

private:
    CaseId id_;
    std::vector<double> values_;
};

/// Checked constructor with the spec-facing name.
inline CaseParams validate(CaseId id, std::vector<double> values) {
    return CaseParams(id, std::move(values));
}

/// Change of variables for the 4-parameter form of (11,22),
/// y' = alpha2 + beta2*x. Rescaling x* = beta2*x turns it into the canonical
/// 3-parameter form with alpha1* = alpha1*beta2; orbits satisfy
/// x*_n = beta2*x_n and y*_n = y_n.
CaseParams normalize_1122(double alpha1, double A1, double alpha2, double beta2);

/// Case table as JSON for documentation tooling (schema 1).
nlohmann::json cases_json();

const char* to_string(YMapKind kind);
const char* to_string(ForbiddenSet f);

}  // namespace rds11
