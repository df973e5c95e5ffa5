#ifndef SLICE_STABILITY_HPP
#define SLICE_STABILITY_HPP

#include "slice/domain.hpp"

namespace slice {

/// Deficit-strengthened inequality coefficients.
inline constexpr double kKappaKhinchin = 8e-5;   // sign-sum side
inline constexpr double kKappaCube = 6e-5;       // cube-section side

struct SzarekConstants {
    double delta0 = 0.0;
    double gamma0 = 0.0;
    double c0 = 0.0;  // near-extremizer self-improvement
    double c1 = 0.0;  // far regime, largest coordinate below 1/sqrt(2)
    double c2 = 0.0;  // largest coordinate barely above 1/sqrt(2)
    double kappa1 = 0.0;  // min of the four candidates (gamma0 included)
};

struct BallConstants {
    double c1_near = 0.0;       // inf over (0,1/4) of sqrt(2)(1-M(d))/sqrt(d)
    double near_branch_bound = 0.0;  // sqrt(2)(1 - (3/pi)^(1/4))
    double far_composite_bound = 0.0;  // the moderate-a1 regime bound
    double c2_far = 0.0;        // chosen constant for that regime
    double gamma0 = 0.0;
    double kappa_inf = 0.0;
};

/// E|sum a_j eps_j| >= 1/sqrt(2) + kappa * sqrt(deficit): value, bound
/// and margin. Exact enumeration for n <= 24, sign Monte Carlo beyond.
StabilityReport robust_szarek_margin(const Direction& a,
                                     std::uint64_t samples = 1'000'000,
                                     std::uint64_t seed = 0x5eed0001);

/// vol(Q_n meet a-perp) <= sqrt(2) - kappa * sqrt(deficit). The value
/// comes from the Fourier oracle when the support allows (n <= 6 always
/// does), otherwise from the sphere-lift Monte Carlo.
StabilityReport robust_ball_margin(const Direction& a,
                                   std::uint64_t samples = 1'000'000,
                                   std::uint64_t seed = 0x5eed0002);

/// The four sign-sum stability candidates and their minimum.
/// Requires 0 < delta0 < 2/3, gamma0 <= 1 - 1/sqrt(2), 2 sqrt(gamma0) < delta0.
SzarekConstants szarek_case_constants(double delta0, double gamma0);

/// Self-improvement envelope for the cube near the extremizer:
/// max of (1 - d + sqrt(d(2-d)/5))^-1 and (1-d)^-2 (1 - d - sqrt(d(2-d))/(2 sqrt 2)).
double ball_M(double delta);

/// Full cube-side constants pipeline at the fixed parameter choices
/// (gamma0 = 3.2e-5, c2 = 2e-4).
BallConstants ball_case_constants();

struct SRatio {
    double value = 0.0;
    bool at_least_nine_fourths = false;
};

/// s(d) = 2 (1 - d/2)^-2, and whether it clears 9/4.
SRatio s_of_delta(double delta);

}  // namespace slice

#endif
