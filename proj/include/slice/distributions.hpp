#ifndef SLICE_DISTRIBUTIONS_HPP
#define SLICE_DISTRIBUTIONS_HPP

#include "slice/domain.hpp"
#include "slice/rng.hpp"

namespace slice {

/// Law of the radial factors R with density x^p e^{-x^p} / alpha_p on
/// x > 0, alpha_p = Gamma(1+1/p)/p. Under u = x^p this is a Gamma law
/// with shape (p+1)/p, which is how sampling works: R = G^(1/p).
class SectionRadiusLaw {
  public:
    explicit SectionRadiusLaw(Exponent p);

    double p() const { return p_; }
    /// alpha_p = (1/p) Gamma(1 + 1/p).
    double normalizer() const { return alpha_; }
    /// Density g_p(x); zero for x <= 0.
    double density(double x) const;
    /// E R^s = Gamma(1+(s+1)/p) / Gamma(1+1/p); requires s > -p-1.
    double moment(double s) const;
    /// One variate. Sampled in log space so p up to 1e6 stays exact.
    double sample(CounterRng& rng) const;

  private:
    double p_;
    double alpha_;
    double log_norm_;  // log(1/alpha_p)
};

/// Law of the projection factors X with density
/// |x|^((2-q)/(q-1)) e^{-|x|^(q/(q-1))} / gamma_q, gamma_q = 2(q-1)Gamma(1+1/q).
/// |X| = G^((q-1)/q) with G ~ Gamma(1/q); the sign is an independent
/// fair coin.
class ProjectionFactorLaw {
  public:
    explicit ProjectionFactorLaw(Exponent q);  // q in (1, 2]

    double q() const { return q_; }
    /// gamma_q = 2(q-1) Gamma(1+1/q).
    double normalizer() const { return gamma_; }
    /// Density of the signed X at x.
    double density(double x) const;
    /// Density f_q of |X|; zero for x <= 0.
    double density_abs(double x) const;
    /// E |X|^s = Gamma(1 + (s-1)(q-1)/q) / Gamma(1/q); s > -1/(q-1).
    double moment_abs(double s) const;
    double sample(CounterRng& rng) const;      // signed
    double sample_abs(CounterRng& rng) const;  // |X|

  private:
    double q_;
    double gamma_;
    double log_norm_abs_;  // log(1/((q-1) Gamma(1+1/q)))
};

/// |a1 xi1 + a2 xi2|^2 for independent uniform sphere directions has the
/// law of a1^2 + a2^2 + 2 a1 a2 U with U uniform on [-1, 1].
double two_atom_radius_squared(double a1, double a2, double u);

}  // namespace slice

#endif
