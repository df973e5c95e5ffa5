#include "slice/stability.hpp"

#include <cmath>

#include "slice/projections.hpp"
#include "slice/sections.hpp"
#include "slice/special.hpp"

namespace slice {

namespace {
constexpr double kSqrt2 = 1.41421356237309504880;
}

StabilityReport robust_szarek_margin(const Direction& a, std::uint64_t samples,
                                     std::uint64_t seed) {
    double value;
    double se = 0.0;
    if (a.dim() <= 24) {
        value = khinchin_exact(a);
    } else {
        ProjectionQuery q(a, Exponent::finite(1.0), samples, seed);
        const MCEstimate est = estimate_projection_ratio(q);
        value = est.mean;
        se = est.std_error;
    }
    const double d = deficit(a);
    const double bound = 1.0 / kSqrt2 + kKappaKhinchin * std::sqrt(d);
    return {a, d, value, bound, value - bound, se};
}

StabilityReport robust_ball_margin(const Direction& a, std::uint64_t samples,
                                   std::uint64_t seed) {
    double value;
    double se = 0.0;
    if (a.support_size() <= 8) {
        QuadratureSpec spec;
        spec.abs_tol = 1e-10;
        value = cube_section_fourier(a, spec);
    } else {
        SectionQuery q(a, Exponent::infinity(), samples, seed);
        const MCEstimate est = estimate_section_ratio(q);
        value = est.mean;
        se = est.std_error;
    }
    const double d = deficit(a);
    const double bound = kSqrt2 - kKappaCube * std::sqrt(d);
    return {a, d, value, bound, bound - value, se};
}

SzarekConstants szarek_case_constants(double delta0, double gamma0) {
    if (!(delta0 > 0.0) || !(delta0 < 2.0 / 3.0)) {
        throw InvalidInputError("szarek_case_constants requires 0 < delta0 < 2/3");
    }
    if (!(gamma0 > 0.0) || gamma0 > 1.0 - 1.0 / kSqrt2) {
        throw InvalidInputError("szarek_case_constants requires 0 < gamma0 <= 1 - 1/sqrt(2)");
    }
    if (!(2.0 * std::sqrt(gamma0) < delta0)) {
        throw InvalidInputError("szarek_case_constants requires 2 sqrt(gamma0) < delta0");
    }
    SzarekConstants out;
    out.delta0 = delta0;
    out.gamma0 = gamma0;
    const double f2 = haagerup_F(2.0);
    const double inv_2s2 = 1.0 / (2.0 * kSqrt2);

    out.c0 = inv_2s2 * (std::sqrt((4.0 - delta0) / 5.0) - std::sqrt(delta0));
    out.c1 = inv_2s2 * (haagerup_F(8.0 / ((2.0 - delta0) * (2.0 - delta0))) - f2);
    const double b = 2.0 + 2.0 * std::sqrt(gamma0) - delta0;
    out.c2 = inv_2s2 * (haagerup_F(8.0 / (b * b)) - f2) *
                 std::sqrt(delta0 - 2.0 * std::sqrt(gamma0)) -
             std::sqrt(2.0 * gamma0 + gamma0 * gamma0);
    out.kappa1 = std::min(std::min(out.c0, out.c1), std::min(out.c2, gamma0));
    return out;
}

double ball_M(double delta) {
    if (!(delta > 0.0) || !(delta < 0.25)) {
        throw std::domain_error("ball_M requires delta in (0, 1/4)");
    }
    const double root = std::sqrt(delta * (2.0 - delta));
    const double one = 1.0 / (1.0 - delta + root / std::sqrt(5.0));
    const double two = (1.0 - delta - root / (2.0 * kSqrt2)) /
                       ((1.0 - delta) * (1.0 - delta));
    return std::max(one, two);
}

namespace {

double ball_near_objective(double d) {
    return kSqrt2 * (1.0 - ball_M(d)) / std::sqrt(d);
}

// Dense grid over (0, 1/4) followed by golden-section refinement around
// the grid minimum.
double ball_near_infimum() {
    constexpr int kGrid = 10'000;
    const double lo = 1e-9;
    const double hi = 0.25 - 1e-12;
    double best = ball_near_objective(lo);
    int besti = 0;
    for (int i = 1; i <= kGrid; ++i) {
        const double d = lo + (hi - lo) * i / kGrid;
        const double v = ball_near_objective(d);
        if (v < best) {
            best = v;
            besti = i;
        }
    }
    double a = lo + (hi - lo) * std::max(0, besti - 1) / kGrid;
    double b = lo + (hi - lo) * std::min(kGrid, besti + 1) / kGrid;
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = ball_near_objective(x1);
    double f2 = ball_near_objective(x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = ball_near_objective(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = ball_near_objective(x2);
        }
    }
    return std::min(std::min(f1, f2), best);
}

}  // namespace

BallConstants ball_case_constants() {
    BallConstants out;
    out.gamma0 = 3.2e-5;
    out.c2_far = 2e-4;
    out.c1_near = ball_near_infimum();
    out.near_branch_bound = kSqrt2 * (1.0 - std::pow(3.0 / 3.14159265358979323846, 0.25));
    // Moderate-a1 regime: reduction to the small-a1 case costs the
    // perturbation 2 sqrt(gamma0^2 + 2 gamma0) and keeps the better of
    // the two entry bounds, with the near constant fixed at 0.12.
    const double c1_cited = 0.12;
    const double entry = std::min(c1_cited * std::sqrt(0.125 - std::sqrt(out.gamma0)),
                                  1.0 - std::pow(3.0 / 3.14159265358979323846, 0.25));
    out.far_composite_bound = kSqrt2 - kSqrt2 * entry +
                              2.0 * std::sqrt(out.gamma0 * out.gamma0 + 2.0 * out.gamma0);
    out.kappa_inf = std::min(std::min(out.c1_near, out.c2_far / kSqrt2),
                             2.0 * out.gamma0 / (1.0 + out.gamma0 * kSqrt2));
    return out;
}

SRatio s_of_delta(double delta) {
    if (!(delta >= 0.0) || !(delta < 2.0)) {
        throw std::domain_error("s_of_delta requires 0 <= delta < 2");
    }
    const double denom = 1.0 - 0.5 * delta;
    const double v = 2.0 / (denom * denom);
    return {v, v >= 2.25};
}

}  // namespace slice
