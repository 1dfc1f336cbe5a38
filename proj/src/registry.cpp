#include "rds11/registry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rds11 {

namespace {

std::vector<CaseSpec> build_table() {
    auto mk = [](int idx, std::vector<std::string> names, YMapKind kind,
                 ForbiddenSet forb, std::string form) {
        return CaseSpec{CaseId(idx), std::move(names), kind, forb, std::move(form)};
    };
    std::vector<CaseSpec> t;
    t.push_back(mk(1, {"alpha1", "A1", "alpha2", "A2"}, YMapKind::Constant,
                   ForbiddenSet::None, "alpha2/A2"));
    t.push_back(mk(2, {"alpha1", "A1", "alpha2"}, YMapKind::ReciprocalY,
                   ForbiddenSet::YZero, "alpha2/y"));
    t.push_back(mk(3, {"alpha1", "A1", "alpha2"}, YMapKind::ReciprocalX,
                   ForbiddenSet::XZero, "alpha2/x"));
    t.push_back(mk(4, {"alpha1", "A1", "gamma2"}, YMapKind::LinearY,
                   ForbiddenSet::None, "gamma2*y"));
    t.push_back(mk(5, {"alpha1", "A1", "beta2", "B2"}, YMapKind::Constant,
                   ForbiddenSet::None, "beta2/B2"));
    t.push_back(mk(7, {"alpha1", "A1", "beta2"}, YMapKind::LinearX,
                   ForbiddenSet::None, "beta2*x"));
    t.push_back(mk(9, {"alpha1", "A1", "gamma2", "C2"}, YMapKind::Constant,
                   ForbiddenSet::None, "gamma2/C2"));
    t.push_back(mk(10, {"alpha1", "A1", "alpha2", "A2"}, YMapKind::RiccatiY,
                   ForbiddenSet::None, "alpha2/(A2 + y)"));
    t.push_back(mk(11, {"alpha1", "A1", "alpha2", "A2"}, YMapKind::RiccatiXnum,
                   ForbiddenSet::None, "alpha2/(A2 + x)"));
    t.push_back(mk(13, {"alpha1", "A1", "A2"}, YMapKind::SaturatingY,
                   ForbiddenSet::None, "y/(A2 + y)"));
    t.push_back(mk(17, {"alpha1", "A1", "A2"}, YMapKind::SaturatingX,
                   ForbiddenSet::None, "x/(A2 + x)"));
    t.push_back(mk(19, {"alpha1", "A1", "alpha2", "gamma2"}, YMapKind::AffineY,
                   ForbiddenSet::None, "alpha2 + gamma2*y"));
    t.push_back(mk(20, {"alpha1", "A1", "alpha2", "gamma2"}, YMapKind::RatioY,
                   ForbiddenSet::YZero, "(alpha2 + gamma2*y)/y"));
    t.push_back(mk(22, {"alpha1", "A1", "alpha2"}, YMapKind::AffineX,
                   ForbiddenSet::None, "alpha2 + x"));
    t.push_back(mk(24, {"alpha1", "A1", "alpha2"}, YMapKind::RatioX,
                   ForbiddenSet::XZero, "(alpha2 + x)/x"));
    t.push_back(mk(28, {"alpha1", "A1", "alpha2", "gamma2", "A2"}, YMapKind::RiccatiY,
                   ForbiddenSet::None, "(alpha2 + gamma2*y)/(A2 + y)"));
    t.push_back(mk(32, {"alpha1", "A1", "alpha2", "A2"}, YMapKind::RiccatiXfull,
                   ForbiddenSet::None, "(alpha2 + x)/(A2 + x)"));
    return t;
}

const std::vector<CaseSpec>& table() {
    static const std::vector<CaseSpec> t = build_table();
    return t;
}

}  // namespace

const CaseSpec& case_spec(CaseId id) {
    for (const CaseSpec& s : table())
        if (s.id == id) return s;
    throw UnknownCase("no spec registered for case " + id.label());
}

std::span<const CaseSpec> all_case_specs() { return table(); }

CaseParams::CaseParams(CaseId id, std::vector<double> values)
    : id_(id), values_(std::move(values)) {
    const CaseSpec& spec = case_spec(id_);
    if (values_.size() != spec.param_names.size()) {
        std::ostringstream os;
        os << "case " << id_.label() << " takes " << spec.param_names.size()
           << " parameters (";
        for (std::size_t i = 0; i < spec.param_names.size(); ++i)
            os << (i ? ", " : "") << spec.param_names[i];
        os << "), got " << values_.size();
        throw ArityMismatch(os.str());
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const double v = values_[i];
        if (!(v > 0.0) || !std::isfinite(v))
            throw NonPositiveParameter(
                spec.param_names[i],
                "parameter " + spec.param_names[i] + " of case " + id_.label() +
                    " must be a positive finite real, got " + std::to_string(v));
    }
}

double CaseParams::value_of(std::string_view symbol) const {
    const CaseSpec& spec = case_spec(id_);
    for (std::size_t i = 0; i < spec.param_names.size(); ++i)
        if (spec.param_names[i] == symbol) return values_[i];
    throw ArityMismatch("case " + id_.label() + " has no parameter named " +
                        std::string(symbol));
}

CaseParams normalize_1122(double alpha1, double A1, double alpha2, double beta2) {
    const struct {
        const char* name;
        double v;
    } raw[] = {{"alpha1", alpha1}, {"A1", A1}, {"alpha2", alpha2}, {"beta2", beta2}};
    for (const auto& [name, v] : raw)
        if (!(v > 0.0) || !std::isfinite(v))
            throw NonPositiveParameter(
                name, std::string("parameter ") + name +
                          " of the 4-parameter form of case 11,22 must be a "
                          "positive finite real");
    return CaseParams(CaseId(22), {alpha1 * beta2, A1, alpha2});
}

nlohmann::json cases_json() {
    nlohmann::json cases = nlohmann::json::array();
    for (const CaseSpec& s : table()) {
        cases.push_back({{"index", s.id.index()},
                         {"label", s.id.label()},
                         {"param_names", s.param_names},
                         {"y_map_kind", to_string(s.y_map_kind)},
                         {"y_map", s.reduced_form},
                         {"forbidden_initials", to_string(s.forbidden_initials)}});
    }
    return nlohmann::json{{"schema", 1}, {"cases", cases}};
}

const char* to_string(YMapKind kind) {
    switch (kind) {
        case YMapKind::Constant: return "Constant";
        case YMapKind::ReciprocalY: return "ReciprocalY";
        case YMapKind::ReciprocalX: return "ReciprocalX";
        case YMapKind::LinearY: return "LinearY";
        case YMapKind::LinearX: return "LinearX";
        case YMapKind::RiccatiY: return "RiccatiY";
        case YMapKind::RiccatiXnum: return "RiccatiXnum";
        case YMapKind::RiccatiXfull: return "RiccatiXfull";
        case YMapKind::AffineY: return "AffineY";
        case YMapKind::AffineX: return "AffineX";
        case YMapKind::RatioY: return "RatioY";
        case YMapKind::RatioX: return "RatioX";
        case YMapKind::SaturatingY: return "SaturatingY";
        case YMapKind::SaturatingX: return "SaturatingX";
    }
    return "?";
}

const char* to_string(ForbiddenSet f) {
    switch (f) {
        case ForbiddenSet::None: return "none";
        case ForbiddenSet::YZero: return "y0 = 0";
        case ForbiddenSet::XZero: return "x0 = 0";
    }
    return "?";
}

}  // namespace rds11
