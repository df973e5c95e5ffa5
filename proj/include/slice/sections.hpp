#ifndef SLICE_SECTIONS_HPP
#define SLICE_SECTIONS_HPP

#include <span>
#include <utility>

#include "slice/distributions.hpp"
#include "slice/domain.hpp"
#include "slice/special.hpp"

namespace slice {

struct SectionQuery {
    Direction a;
    Exponent p;
    std::uint64_t samples;
    std::uint64_t seed;

    SectionQuery(Direction a_, Exponent p_, std::uint64_t samples_, std::uint64_t seed_);
};

/// Normalized central section A(a) = vol(B_p^n meet a-perp)/vol(B_p^{n-1})
/// by Monte Carlo over the three-dimensional sphere lift: the per-sample
/// value is Gamma(1+1/p) / |sum_j a_j R_j xi_j|. The negative first
/// moment is estimable because the rotationally invariant sum has a
/// bounded density near zero. For p = inf the same estimator runs with
/// R_j = 1.
MCEstimate estimate_section_ratio(const SectionQuery& query);

/// Exact two-dimensional value: A(a) = 1/|a|_p (p = inf gives 1/a1).
double exact_section_ratio_2d(const Direction& a, Exponent p);

/// Value at the extremal direction (e1+e2)/sqrt(2): 2^(1/2 - 1/p).
double ball_direction_value(Exponent p);

/// vol(Q_n meet a-perp) for the unit-volume cube, as the density at zero
/// of sum a_j U_j: (1/pi) * integral of prod_j sinc(a_j t / 2).
/// Deterministic oracle for the p = inf estimator. Coordinates below
/// 1e-9 are treated as zero (their contribution is quadratically small);
/// supports of size one and two take the exact closed forms.
double cube_section_fourier(const Direction& a, const QuadratureSpec& spec = {});

/// Busemann norm N(x) = |x| / vol(Q_n meet x-perp); a genuine norm.
/// Uses the Fourier oracle for supports up to 8, Monte Carlo above.
double busemann_norm(std::span<const double> x, const QuadratureSpec& spec = {});

/// E |x1 xi1 + x2 xi2|^{-1} = 1/max(x1, x2) in closed form.
double two_atom_inverse_moment(double x1, double x2);

/// Two routes to the same moment: E|sum x_j xi_j|^s over sphere vectors
/// against (1+s) E|sum x_j U_j|^s over scalar uniforms. Returns both
/// Monte Carlo estimates for property testing; requires s > -1, s != 0.
std::pair<MCEstimate, MCEstimate> konig_kwapien_check(std::span<const double> x, double s,
                                                      std::uint64_t samples,
                                                      std::uint64_t seed);

/// vol(B_p^n) = (2 Gamma(1+1/p))^n / Gamma(1+n/p); 2^n for p = inf.
double ball_volume(std::size_t n, Exponent p);

/// Absolute section volume: estimate of A(a) times vol(B_p^{n-1}).
MCEstimate section_volume_absolute(const Direction& a, Exponent p, std::uint64_t samples,
                                   std::uint64_t seed);

}  // namespace slice

#endif
