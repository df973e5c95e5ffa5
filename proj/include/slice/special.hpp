#ifndef SLICE_SPECIAL_HPP
#define SLICE_SPECIAL_HPP

#include "slice/domain.hpp"

namespace slice {

struct QuadratureSpec {
    double abs_tol = 1e-8;
    int max_periods = 1 << 23;
};

/// Natural log of Gamma(x) for x > 0, Lanczos approximation.
/// Relative error of exp(log_gamma(x)) stays below 1e-13 on [0.5, 100].
double log_gamma(double x);

/// Gamma(x) = exp(log_gamma(x)).
double gamma_fn(double x);

/// log Gamma(1+x) for |x| <= 0.25 via the zeta series; keeps full
/// precision near 0 where the Lanczos form would lose digits to
/// cancellation in downstream second differences.
double log_gamma1p(double x);

/// F(s) = (2/sqrt(pi s)) * Gamma((s+1)/2) / Gamma(s/2), s > 0.
/// Strictly increasing from 0 toward sqrt(2/pi); F(2) = 1/sqrt(2).
double haagerup_F(double s);

/// Limit of F at infinity: sqrt(2/pi).
double haagerup_F_limit();

/// Psi(s) = (2/pi) sqrt(s) * integral_0^inf |sin t / t|^s dt for s >= 2.
/// The quadrature splits the axis at multiples of pi; the remainder past
/// the last explicit period is a smooth sum evaluated analytically with
/// an error bound checked against abs_tol.
double ball_psi(double s, const QuadratureSpec& spec = {});

/// h(x) = Gamma(1+3x) - 2 Gamma(1+2x) + Gamma(1+x) for 0 < x < 1/3.
/// Satisfies h >= 0 and h(x) <= 2x^2 for x < 1/5; h(x)/x^2 -> Gamma''(1).
double gamma_second_difference(double x);

}  // namespace slice

#endif
