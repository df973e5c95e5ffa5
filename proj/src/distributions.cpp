#include "slice/distributions.hpp"

#include <cmath>

#include "slice/special.hpp"

namespace slice {

SectionRadiusLaw::SectionRadiusLaw(Exponent p) {
    if (p.is_infinite()) {
        throw InvalidInputError("SectionRadiusLaw requires a finite exponent");
    }
    p_ = p.value();
    const double lg = log_gamma(1.0 + 1.0 / p_);
    alpha_ = std::exp(lg) / p_;
    log_norm_ = std::log(p_) - lg;
}

double SectionRadiusLaw::density(double x) const {
    if (x <= 0.0) return 0.0;
    return std::exp(log_norm_ + p_ * std::log(x) - std::pow(x, p_));
}

double SectionRadiusLaw::moment(double s) const {
    if (!(s > -p_ - 1.0)) {
        throw DivergentMomentError("moment of R diverges for s <= -p-1");
    }
    return std::exp(log_gamma(1.0 + (s + 1.0) / p_) - log_gamma(1.0 + 1.0 / p_));
}

double SectionRadiusLaw::sample(CounterRng& rng) const {
    return std::exp(rng.log_gamma_variate(1.0 + 1.0 / p_) / p_);
}

ProjectionFactorLaw::ProjectionFactorLaw(Exponent q) {
    if (q.is_infinite() || !(q.value() > 1.0) || !(q.value() <= 2.0)) {
        throw InvalidInputError("ProjectionFactorLaw requires q in (1, 2]");
    }
    q_ = q.value();
    const double lg1p = log_gamma(1.0 + 1.0 / q_);
    gamma_ = 2.0 * (q_ - 1.0) * std::exp(lg1p);
    log_norm_abs_ = -std::log(q_ - 1.0) - lg1p;
}

double ProjectionFactorLaw::density(double x) const {
    if (x == 0.0) return q_ < 2.0 ? 0.0 : 1.0 / gamma_;
    return 0.5 * density_abs(std::fabs(x));
}

double ProjectionFactorLaw::density_abs(double x) const {
    if (x <= 0.0) return 0.0;
    const double expo = q_ / (q_ - 1.0);
    return std::exp(log_norm_abs_ + (2.0 - q_) / (q_ - 1.0) * std::log(x) -
                    std::pow(x, expo));
}

double ProjectionFactorLaw::moment_abs(double s) const {
    if (!(s > -1.0 / (q_ - 1.0))) {
        throw DivergentMomentError("moment of |X| diverges for s <= -1/(q-1)");
    }
    return std::exp(log_gamma(1.0 + (s - 1.0) * (q_ - 1.0) / q_) - log_gamma(1.0 / q_));
}

double ProjectionFactorLaw::sample(CounterRng& rng) const {
    const double sign = rng.uniform01() < 0.5 ? -1.0 : 1.0;
    return sign * sample_abs(rng);
}

double ProjectionFactorLaw::sample_abs(CounterRng& rng) const {
    return std::exp(rng.log_gamma_variate(1.0 / q_) * (q_ - 1.0) / q_);
}

double two_atom_radius_squared(double a1, double a2, double u) {
    double r2 = a1 * a1 + a2 * a2 + 2.0 * a1 * a2 * u;
    return r2 < 0.0 ? 0.0 : r2;
}

}  // namespace slice
