#include "rds11/conjugacy.hpp"

#include <cmath>

#include "rds11/model.hpp"

namespace rds11 {

namespace {

constexpr int kConjugateCases[] = {3, 7, 10, 11, 13, 17, 19, 22, 24, 32};
constexpr int kSecondOrderCases[] = {3, 7, 11, 17, 22, 24, 32};

bool contains(std::span<const int> xs, int v) {
    for (int x : xs)
        if (x == v) return true;
    return false;
}

void require_conjugate(CaseId id) {
    if (!is_conjugate_case(id))
        throw NotConjugateCase("case " + id.label() +
                               " has autonomous y-dynamics; no lifted map is defined");
}

void require_domain_f(const CaseParams& cp, const State& s) {
    const double x_max = cp.alpha1() / cp.A1();
    if (!(s.x > 0.0) || !(s.x < x_max) || !(s.y > 0.0))
        throw DomainViolation("state outside (0, alpha1/A1) x (0, inf)");
}

void require_domain_g(const State& t) {
    if (!(t.x > 0.0) || !(t.y > 0.0))
        throw DomainViolation("state outside (0, inf)^2");
}

}  // namespace

bool is_conjugate_case(CaseId id) { return contains(kConjugateCases, id.index()); }

bool is_second_order_reduction(CaseId id) {
    return contains(kSecondOrderCases, id.index());
}

State h_map(const CaseParams& cp, const State& s) {
    require_domain_f(cp, s);
    return State(s.y, cp.alpha1() / s.x - cp.A1());
}

State h_inv_map(const CaseParams& cp, const State& t) {
    require_domain_g(t);
    return State(cp.alpha1() / (cp.A1() + t.y), t.x);
}

State g_map(const CaseParams& cp, const State& t) {
    require_conjugate(cp.id());
    require_domain_g(t);
    const auto& v = cp.values();
    const double a1 = v[0], A1 = v[1];
    switch (cp.id().index()) {
        // First-order reductions: g reads the current value in the first slot.
        case 10: return State(v[2] / (v[3] + t.x), t.x);
        case 13: return State(t.x / (v[2] + t.x), t.x);
        case 19: return State(v[2] + v[3] * t.x, t.x);
        // Second-order reductions: g reads u_{n-1} from the second slot,
        // written with the nested alpha1/(A1+u) exactly as displayed.
        case 3:  return State(v[2] / (a1 / (A1 + t.y)), t.x);
        case 7:  return State(v[2] * (a1 / (A1 + t.y)), t.x);
        case 11: return State(v[2] / (v[3] + a1 / (A1 + t.y)), t.x);
        case 17: {
            const double w = a1 / (A1 + t.y);
            return State(w / (v[2] + w), t.x);
        }
        case 22: return State(v[2] + a1 / (A1 + t.y), t.x);
        case 24: {
            const double w = a1 / (A1 + t.y);
            return State((v[2] + w) / w, t.x);
        }
        case 32: {
            const double w = a1 / (A1 + t.y);
            return State((v[2] + w) / (v[3] + w), t.x);
        }
    }
    throw NotConjugateCase("g_map: unhandled case " + cp.id().label());
}

double verify_conjugacy(const CaseParams& cp, std::span<const State> grid) {
    require_conjugate(cp.id());
    double worst = 0.0;
    for (const State& s : grid) {
        require_domain_f(cp, s);
        const State via_g = h_inv_map(cp, g_map(cp, h_map(cp, s)));
        const State direct = step_case(cp, s);
        const double scale =
            std::max({1.0, sup_norm(direct), sup_norm(via_g)});
        worst = std::max(worst, sup_dist(via_g, direct) / scale);
    }
    return worst;
}

std::pair<std::vector<double>, std::vector<double>> riccati_split(
    std::span<const double> u_orbit) {
    std::vector<double> even, odd;
    even.reserve((u_orbit.size() + 1) / 2);
    odd.reserve(u_orbit.size() / 2);
    for (std::size_t i = 0; i < u_orbit.size(); ++i)
        (i % 2 == 0 ? even : odd).push_back(u_orbit[i]);
    return {std::move(even), std::move(odd)};
}

double RiccatiCoeffs::eval(double u) const {
    const double den = c + d * u;
    if (den == 0.0) throw ZeroDenominator("Riccati map denominator is zero");
    return (a + b * u) / den;
}

RiccatiCoeffs riccati_coeffs(const CaseParams& cp) {
    require_conjugate(cp.id());
    const auto& v = cp.values();
    const double a1 = v[0], A1 = v[1];
    RiccatiCoeffs r;
    switch (cp.id().index()) {
        case 3:  r = {v[2] * A1, v[2], a1, 0.0, true}; break;
        case 7:  r = {v[2] * a1, 0.0, A1, 1.0, true}; break;
        case 10: r = {v[2], 0.0, v[3], 1.0, false}; break;
        case 11: r = {v[2] * A1, v[2], v[3] * A1 + a1, v[3], true}; break;
        case 13: r = {0.0, 1.0, v[2], 1.0, false}; break;
        case 17: r = {a1, 0.0, v[2] * A1 + a1, v[2], true}; break;
        case 19: r = {v[2], v[3], 1.0, 0.0, false}; break;
        case 22: r = {v[2] * A1 + a1, v[2], A1, 1.0, true}; break;
        case 24: r = {v[2] * A1 + a1, v[2], a1, 0.0, true}; break;
        case 32: r = {v[2] * A1 + a1, v[2], v[3] * A1 + a1, v[3], true}; break;
        default:
            throw NotConjugateCase("riccati_coeffs: unhandled case " +
                                   cp.id().label());
    }
    return r;
}

ConjugacyTriple::ConjugacyTriple(CaseParams cp) : cp_(std::move(cp)), x_max_(0.0) {
    require_conjugate(cp_.id());
    x_max_ = cp_.alpha1() / cp_.A1();
}

State ConjugacyTriple::f(const State& s) const {
    require_domain_f(cp_, s);
    return step_case(cp_, s);
}

std::vector<State> domain_grid(const CaseParams& cp, int nx, int ny, double y_lo,
                               double y_hi) {
    if (nx < 1 || ny < 1 || !(y_lo > 0.0) || !(y_hi >= y_lo))
        throw InvalidParameter("domain_grid: need nx, ny >= 1 and 0 < y_lo <= y_hi");
    const double x_max = cp.alpha1() / cp.A1();
    // x as a log-spaced fraction of x_max in [1e-3, 1 - 1e-3]; y log-spaced.
    const double f_lo = 1e-3, f_hi = 1.0 - 1e-3;
    std::vector<State> grid;
    grid.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
    for (int i = 0; i < nx; ++i) {
        const double ti = nx == 1 ? 0.5 : static_cast<double>(i) / (nx - 1);
        const double x = x_max * f_lo * std::pow(f_hi / f_lo, ti);
        for (int j = 0; j < ny; ++j) {
            const double tj = ny == 1 ? 0.5 : static_cast<double>(j) / (ny - 1);
            const double y = y_lo * std::pow(y_hi / y_lo, tj);
            grid.emplace_back(x, y);
        }
    }
    return grid;
}

}  // namespace rds11
