#ifndef SLICE_INEQUALITY_LAB_HPP
#define SLICE_INEQUALITY_LAB_HPP

#include "slice/domain.hpp"

namespace slice {

/// Near-extremizer configuration for the two core inductive bounds.
/// The exponent is p on the section side and q on the projection side;
/// in both cases the steep exponent is p = q/(q-1) resp. p itself, and
/// admissibility asks p >= L*c + 2 together with the closeness
/// hypotheses sqrt(deficit) < c/p and |(a1,a2)|_p <= 2^(1/p-1/2).
class CaseTwoConfig {
  public:
    static CaseTwoConfig section(Direction a, double p, double c, double L);
    static CaseTwoConfig projection(Direction a, double q, double c, double L);

    const Direction& direction() const { return a_; }
    bool section_side() const { return section_side_; }
    /// The configured exponent (p or q, by side).
    double exponent() const { return exponent_; }
    /// The steep exponent: p itself, or q/(q-1) on the projection side.
    double steep_exponent() const;
    double c() const { return c_; }
    double L() const { return big_l_; }
    /// Scale of the competing block: sqrt(1-a1^2-a2^2)/C_p on the
    /// section side, c_q * sqrt(1-a1^2-a2^2) on the projection side.
    double alpha() const;
    /// Throws PreconditionError when any Case-2 hypothesis fails.
    void validate() const;

  private:
    CaseTwoConfig(Direction a, double expo, double c, double L, bool section);
    Direction a_;
    double exponent_;
    double c_;
    double big_l_;
    bool section_side_;
};

/// Power mean vs arithmetic mean with a quadratic deficit:
/// ((b1^r + b2^r)/2)^(1/r) >= (b1+b2)/2 + (r-1)(1-e^(-s/2))/(4s)(b1-b2)^2
/// under r >= max(sigma, 2), b1 in (0,1], 1 - sigma/r <= b2/b1 <= 1.
LemmaVerdict check_p_means_deficit(double sigma, double r, double b1, double b2);

/// Near-extremizer coordinate gap: |a1-a2| <= 3.65 sqrt(c/(p-2)) sqrt(1-a1^2-a2^2)
/// under c >= 1, p > 4 sqrt(2) c, |ai - 1/sqrt(2)| <= c/p and the p-norm cap.
LemmaVerdict check_a1a2(double c, double p, double a1, double a2);

/// E|R-1|^2 <= 2 p^-2 / Gamma(1+1/p) for p > 5, both sides closed form.
LemmaVerdict check_R_L2(double p);

/// E|X - sgn X|^2 <= 9 (1-1/q)^2 for q in (1,2), both sides closed form.
LemmaVerdict check_coupling(double q);

/// |A_p(a) - A_inf(a)| <= 5/p for p > 5, Monte Carlo with shared sphere
/// draws on both sides. Three-valued verdict with a guard band.
LemmaVerdict check_equicontinuity_sections(const Direction& a, double p,
                                           std::uint64_t samples, std::uint64_t seed,
                                           double guard_se = 4.0);

/// |E|sum a X| - E|sum a eps|| <= 3(1-1/q); the sign side is exact for
/// n <= 24.
LemmaVerdict check_equicontinuity_projections(const Direction& a, Exponent q,
                                              std::uint64_t samples, std::uint64_t seed,
                                              double guard_se = 4.0);

/// Core section bound E(|X|^-1 - alpha^-1)_+ >= (3/2) alpha^2. The
/// angular factor is integrated in closed form through the two-atom law,
/// so the Monte Carlo runs over the radial pair only.
LemmaVerdict check_prop_main_section(const CaseTwoConfig& cfg, std::uint64_t samples,
                                     std::uint64_t seed, double guard_se = 4.0);

/// Core projection bound E(alpha - |X|)_+ >= (3/4) alpha^2, sign factor
/// integrated out, Monte Carlo over the magnitude pair.
LemmaVerdict check_prop_main_projection(const CaseTwoConfig& cfg, std::uint64_t samples,
                                        std::uint64_t seed, double guard_se = 4.0);

/// C_p = 2^(1/2-1/p) / Gamma(1+1/p).
double cp_value(double p);
/// Sandwich 1.41 < C_p < 1.42, stated for 1/p < 1e-6.
LemmaVerdict cp_bounds_check(double p);
/// Sandwich 0.7 < c_q < 0.71, stated for 1 - 1/q < 1e-5.
LemmaVerdict cq_bounds_check(Exponent q);

/// P(R1 <= 1, |R1 - R2| < alpha) by Monte Carlo; compared against the
/// trapezoid bound min(1/64, p alpha/32) in tests.
MCEstimate radial_pair_event_probability(double p, double alpha, std::uint64_t samples,
                                         std::uint64_t seed);

/// P(|a1 xi1 + a2 xi2| < alpha/4) in closed form through the two-atom
/// law: (alpha^2/16 - (a1-a2)^2) / (4 a1 a2). Requires the threshold to
/// fall inside the support.
double angular_event_probability(double a1, double a2, double alpha);

/// Same event by sphere Monte Carlo.
MCEstimate angular_event_probability_mc(double a1, double a2, double alpha,
                                        std::uint64_t samples, std::uint64_t seed);

}  // namespace slice

#endif
