#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "rds11/core.hpp"
#include "rds11/registry.hpp"

namespace testsup {

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

/// Units-in-the-last-place distance, exact for finite doubles.
inline std::uint64_t ulp_diff(double a, double b) {
    auto key = [](double x) -> std::int64_t {
        const auto i = std::bit_cast<std::int64_t>(x);
        return i < 0 ? std::numeric_limits<std::int64_t>::min() - i : i;
    };
    const auto ua = static_cast<std::uint64_t>(key(a));
    const auto ub = static_cast<std::uint64_t>(key(b));
    return ua >= ub ? ua - ub : ub - ua;
}

/// Sup distance scaled by max(1, sup norm of the reference).
inline double scaled_dist(const rds11::State& got, const rds11::State& want) {
    return rds11::sup_dist(got, want) / std::max(1.0, rds11::sup_norm(want));
}

/// Which parameter region to draw from. Cases without the named region fall
/// back to a plain draw.
enum class Region { Any, Convergent, Divergent, Saddle, Continuum };

/// Random parameters for a case, each value log-uniform in [lo, hi], with the
/// region-selecting inequality enforced a factor `margin` away from its
/// boundary.
inline rds11::CaseParams draw_params(rds11::CaseId id, std::mt19937_64& rng,
                                     Region region = Region::Any,
                                     double margin = 1.3, double lo = 0.3,
                                     double hi = 3.0) {
    const rds11::CaseSpec& spec = rds11::case_spec(id);
    std::vector<double> v;
    v.reserve(spec.param_names.size());
    for (std::size_t i = 0; i < spec.param_names.size(); ++i)
        v.push_back(log_uniform(rng, lo, hi));
    auto slot = [&](const char* sym) -> double& {
        for (std::size_t i = 0; i < spec.param_names.size(); ++i)
            if (spec.param_names[i] == sym) return v[i];
        throw std::logic_error(std::string("draw_params: no symbol ") + sym);
    };
    const int k = id.index();
    switch (region) {
        case Region::Any:
            break;
        case Region::Convergent:
            if (k == 3 || k == 24)
                slot("alpha1") = slot("alpha2") * margin * log_uniform(rng, 1.0, 3.0);
            if (k == 19 || k == 4)
                slot("gamma2") = log_uniform(rng, 0.1, 1.0) / margin;
            if (k == 13) slot("A2") = margin * log_uniform(rng, 1.0, 3.0);
            break;
        case Region::Divergent:
            if (k == 3 || k == 24)
                slot("alpha2") = slot("alpha1") * margin * log_uniform(rng, 1.0, 3.0);
            if (k == 19 || k == 4)
                slot("gamma2") = margin * log_uniform(rng, 1.0, 2.0);
            break;
        case Region::Saddle:
            if (k == 4) slot("gamma2") = margin * log_uniform(rng, 1.0, 2.0);
            if (k == 13) slot("A2") = log_uniform(rng, 0.2, 1.0) / margin;
            break;
        case Region::Continuum:
            if (k == 4) slot("gamma2") = 1.0;
            break;
    }
    return rds11::validate(id, std::move(v));
}

/// Random interior state, coordinates log-uniform in [0.05, 5].
inline rds11::State draw_state(std::mt19937_64& rng, double lo = 0.05,
                               double hi = 5.0) {
    return rds11::State(log_uniform(rng, lo, hi), log_uniform(rng, lo, hi));
}

/// Random state strictly inside domain_f = (0, alpha1/A1) x (0, inf).
inline rds11::State draw_domain_f_state(const rds11::CaseParams& cp,
                                        std::mt19937_64& rng) {
    const double x_max = cp.alpha1() / cp.A1();
    return rds11::State(x_max * uniform(rng, 0.02, 0.98),
                        log_uniform(rng, 0.05, 20.0));
}

/// The cases whose theorem is plain GAS over all admissible parameters, plus
/// the region-restricted GAS members handled by Region::Convergent.
inline const std::vector<int>& gas_cases() {
    static const std::vector<int> k = {3, 7, 10, 11, 13, 17, 19, 20, 22, 24, 28, 32};
    return k;
}

}  // namespace testsup
