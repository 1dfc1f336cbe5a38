#include "rds11/oracle.hpp"

#include <cmath>
#include <utility>

#include "rds11/model.hpp"

namespace rds11 {

State fixed_point_by_iteration(const CaseParams& cp, State ic,
                               const OracleOptions& opts) {
    State cur = ic;
    int run = 0;
    for (std::size_t n = 0; n < opts.max_iters; ++n) {
        State next = cur;
        try {
            next = step_case(cp, cur);
        } catch (const DomainViolation&) {
            // the orbit left the representable range (overflow): no limit
            throw NoConvergence("orbit from the given state grew without bound");
        }
        run = sup_dist(next, cur) <= opts.tol ? run + 1 : 0;
        cur = next;
        if (run >= 3) return cur;
    }
    throw NoConvergence("iteration from the given state did not settle within " +
                        std::to_string(opts.max_iters) + " steps");
}

namespace {

// Partial derivatives of one component by central difference; second-order
// one-sided stencil when the base coordinate is too close to zero to perturb
// downward.
std::pair<double, double> fd_column(const CaseParams& cp, const State& base,
                                    bool wiggle_x, double h) {
    const double coord = wiggle_x ? base.x : base.y;
    const auto at = [&](double c) {
        return wiggle_x ? step_case(cp, State(c, base.y))
                        : step_case(cp, State(base.x, c));
    };
    if (coord - h >= 0.0) {
        const State hi = at(coord + h), lo = at(coord - h);
        return {(hi.x - lo.x) / (2.0 * h), (hi.y - lo.y) / (2.0 * h)};
    }
    const State f0 = at(coord), f1 = at(coord + h), f2 = at(coord + 2.0 * h);
    return {(-3.0 * f0.x + 4.0 * f1.x - f2.x) / (2.0 * h),
            (-3.0 * f0.y + 4.0 * f1.y - f2.y) / (2.0 * h)};
}

}  // namespace

Spectrum eigen_by_finite_difference(const CaseParams& cp, const State& eq,
                                    double step) {
    const auto [a11, a21] = fd_column(cp, eq, /*wiggle_x=*/true, step);
    const auto [a12, a22] = fd_column(cp, eq, /*wiggle_x=*/false, step);
    // Local 2x2 eigensolve; intentionally not shared with stability.
    const double tr = a11 + a22;
    const double det = a11 * a22 - a12 * a21;
    const double disc = tr * tr - 4.0 * det;
    std::complex<double> l1, l2;
    if (disc >= 0.0) {
        const double sq = std::sqrt(disc);
        l1 = (tr - sq) / 2.0;
        l2 = (tr + sq) / 2.0;
    } else {
        const double im = std::sqrt(-disc) / 2.0;
        l1 = {tr / 2.0, -im};
        l2 = {tr / 2.0, im};
    }
    if (std::abs(l1) > std::abs(l2)) std::swap(l1, l2);
    return Spectrum{l1, l2};
}

}  // namespace rds11
