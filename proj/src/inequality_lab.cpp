#include "slice/inequality_lab.hpp"

#include <cmath>

#include "mc_detail.hpp"
#include "slice/distributions.hpp"
#include "slice/parallel.hpp"
#include "slice/projections.hpp"
#include "slice/special.hpp"

namespace slice {

using detail::finalize;
using detail::McMoments;

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

// Rounding guard for closed-form comparisons: true slack is >= 0, and
// equality cases would otherwise flip on the last ulp.
double ulp_guard(double lhs, double rhs) {
    const double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
    return 32.0 * 2.220446049250313e-16 * scale;
}

LemmaVerdict det_verdict_ge(LemmaId id, std::map<std::string, double> params, double lhs,
                            double rhs) {
    LemmaVerdict v;
    v.id = id;
    v.params = std::move(params);
    v.lhs = lhs;
    v.rhs = rhs;
    v.slack = std::fabs(lhs - rhs);
    v.status = lhs >= rhs - ulp_guard(lhs, rhs) ? VerdictStatus::Pass : VerdictStatus::Fail;
    return v;
}

LemmaVerdict det_verdict_le(LemmaId id, std::map<std::string, double> params, double lhs,
                            double rhs) {
    LemmaVerdict v;
    v.id = id;
    v.params = std::move(params);
    v.lhs = lhs;
    v.rhs = rhs;
    v.slack = std::fabs(lhs - rhs);
    v.status = lhs <= rhs + ulp_guard(lhs, rhs) ? VerdictStatus::Pass : VerdictStatus::Fail;
    return v;
}

// lhs (mean, band) claimed >= rhs. Pass/fail only outside the band.
LemmaVerdict mc_verdict_ge(LemmaId id, std::map<std::string, double> params, double mean,
                           double band, double rhs) {
    LemmaVerdict v;
    v.id = id;
    v.params = std::move(params);
    v.lhs = mean;
    v.rhs = rhs;
    v.slack = mean - rhs;
    if (mean - band >= rhs) {
        v.status = VerdictStatus::Pass;
    } else if (mean + band < rhs) {
        v.status = VerdictStatus::Fail;
    } else {
        v.status = VerdictStatus::Inconclusive;
    }
    return v;
}

LemmaVerdict mc_verdict_le(LemmaId id, std::map<std::string, double> params, double mean,
                           double band, double rhs) {
    LemmaVerdict v;
    v.id = id;
    v.params = std::move(params);
    v.lhs = mean;
    v.rhs = rhs;
    v.slack = rhs - mean;
    if (mean + band <= rhs) {
        v.status = VerdictStatus::Pass;
    } else if (mean - band > rhs) {
        v.status = VerdictStatus::Fail;
    } else {
        v.status = VerdictStatus::Inconclusive;
    }
    return v;
}

double pair_norm_p(double a1, double a2, double p) {
    // a1 >= a2 > 0; factoring out a1 keeps pow() healthy for p ~ 1e6+.
    return a1 * std::exp(std::log1p(std::exp(p * std::log(a2 / a1))) / p);
}

}  // namespace

CaseTwoConfig::CaseTwoConfig(Direction a, double expo, double c, double L, bool section)
    : a_(std::move(a)), exponent_(expo), c_(c), big_l_(L), section_side_(section) {}

CaseTwoConfig CaseTwoConfig::section(Direction a, double p, double c, double L) {
    return CaseTwoConfig(std::move(a), p, c, L, true);
}

CaseTwoConfig CaseTwoConfig::projection(Direction a, double q, double c, double L) {
    return CaseTwoConfig(std::move(a), q, c, L, false);
}

double CaseTwoConfig::steep_exponent() const {
    if (section_side_) return exponent_;
    return exponent_ / (exponent_ - 1.0);
}

double CaseTwoConfig::alpha() const {
    const double a1 = a_[0];
    const double a2 = a_.dim() >= 2 ? a_[1] : 0.0;
    double rest = 1.0 - a1 * a1 - a2 * a2;
    if (rest < 0.0) rest = 0.0;
    if (section_side_) {
        return std::sqrt(rest) / cp_value(exponent_);
    }
    return szarek_value(Exponent::finite(exponent_)) * std::sqrt(rest);
}

void CaseTwoConfig::validate() const {
    if (!section_side_ && !(exponent_ > 1.0 && exponent_ < 2.0)) {
        throw PreconditionError("projection config requires q in (1, 2)");
    }
    if (section_side_ && !(exponent_ > 2.0)) {
        throw PreconditionError("section config requires p > 2");
    }
    if (!(c_ >= 1.0)) {
        throw PreconditionError("config requires c >= 1");
    }
    if (!(big_l_ > 441.0)) {
        throw PreconditionError("config requires L > 441");
    }
    const double p = steep_exponent();
    if (!(p >= big_l_ * c_ + 2.0)) {
        throw PreconditionError("config requires steep exponent >= L*c + 2");
    }
    if (a_.dim() < 2 || !(a_[1] > 0.0)) {
        throw PreconditionError("config requires at least two positive coordinates");
    }
    const double root_deficit = std::sqrt(deficit(a_));
    if (!(root_deficit < c_ / p)) {
        throw PreconditionError("config requires sqrt(deficit) < c/p");
    }
    const double cap = std::exp2(1.0 / p - 0.5);
    const double norm = pair_norm_p(a_[0], a_[1], p);
    if (norm > cap * (1.0 + 1e-14)) {
        throw PreconditionError("config requires |(a1,a2)|_p <= 2^(1/p - 1/2)");
    }
}

LemmaVerdict check_p_means_deficit(double sigma, double r, double b1, double b2) {
    if (!(sigma > 0.0) || !(r >= std::max(sigma, 2.0))) {
        throw PreconditionError("p_means_deficit requires r >= max(sigma, 2) > 0");
    }
    if (!(b1 > 0.0) || b1 > 1.0 || !(b2 > 0.0) || b2 > b1) {
        throw PreconditionError("p_means_deficit requires 0 < b2 <= b1 <= 1");
    }
    if (!(b2 / b1 >= 1.0 - sigma / r)) {
        throw PreconditionError("p_means_deficit requires b2/b1 >= 1 - sigma/r");
    }
    std::map<std::string, double> params{
        {"sigma", sigma}, {"r", r}, {"b1", b1}, {"b2", b2}};
    if (b1 == b2) {
        LemmaVerdict v = det_verdict_ge(LemmaId::PMeansDeficit, std::move(params), b1, b1);
        v.slack = 0.0;
        return v;
    }
    // Long double keeps the quadratic deficit visible when b2/b1 is
    // pinned near 1 by a large r.
    const long double lb1 = b1;
    const long double ratio = static_cast<long double>(b2) / b1;
    const long double power_mean =
        lb1 * std::exp(std::log1p(std::exp(r * std::log(ratio))) / static_cast<long double>(r)) *
        std::exp(static_cast<long double>(-std::log(2.0L)) / r);
    const long double deficit_coeff =
        (static_cast<long double>(r) - 1.0L) * (-std::expm1(-0.5L * sigma)) / (4.0L * sigma);
    const long double gap = static_cast<long double>(b1) - b2;
    const long double rhs = 0.5L * (static_cast<long double>(b1) + b2) + deficit_coeff * gap * gap;
    return det_verdict_ge(LemmaId::PMeansDeficit, std::move(params),
                          static_cast<double>(power_mean), static_cast<double>(rhs));
}

LemmaVerdict check_a1a2(double c, double p, double a1, double a2) {
    if (!(c >= 1.0) || !(p > 4.0 * kSqrt2 * c)) {
        throw PreconditionError("a1a2 requires c >= 1 and p > 4 sqrt(2) c");
    }
    if (!(a2 > 0.0) || a2 > a1) {
        throw PreconditionError("a1a2 requires 0 < a2 <= a1");
    }
    const double off = c / p;
    if (std::fabs(a1 - 1.0 / kSqrt2) > off || std::fabs(a2 - 1.0 / kSqrt2) > off) {
        throw PreconditionError("a1a2 requires |ai - 1/sqrt(2)| <= c/p");
    }
    const double cap = std::exp2(1.0 / p - 0.5);
    if (pair_norm_p(a1, a2, p) > cap * (1.0 + 1e-14)) {
        throw PreconditionError("a1a2 requires |(a1,a2)|_p <= 2^(1/p-1/2)");
    }
    double rest = 1.0 - a1 * a1 - a2 * a2;
    if (rest < 0.0) rest = 0.0;
    const double lhs = a1 - a2;
    const double rhs = 3.65 * std::sqrt(c / (p - 2.0)) * std::sqrt(rest);
    return det_verdict_le(LemmaId::NearPairGap,
                          {{"c", c}, {"p", p}, {"a1", a1}, {"a2", a2}}, lhs, rhs);
}

LemmaVerdict check_R_L2(double p) {
    if (!(p > 5.0)) {
        throw PreconditionError("R L2 bound requires p > 5");
    }
    const double inv_gamma = std::exp(-log_gamma(1.0 + 1.0 / p));
    const double lhs = gamma_second_difference(1.0 / p) * inv_gamma;
    const double rhs = 2.0 / (p * p) * inv_gamma;
    return det_verdict_le(LemmaId::RadialL2Bound, {{"p", p}}, lhs, rhs);
}

LemmaVerdict check_coupling(double q) {
    if (!(q > 1.0) || !(q < 2.0)) {
        throw PreconditionError("coupling bound requires q in (1, 2)");
    }
    const double x = 1.0 - 1.0 / q;
    // Gamma(1+x) + Gamma(1-x) - 2, assembled from expm1 pieces so the
    // q -> 1 limit does not cancel away.
    const double numer = std::expm1(log_gamma1p(x)) + std::expm1(log_gamma1p(-x));
    const double lhs = numer / gamma_fn(1.0 / q);
    const double rhs = 9.0 * x * x;
    return det_verdict_le(LemmaId::SignCouplingL2, {{"q", q}}, lhs, rhs);
}

LemmaVerdict check_equicontinuity_sections(const Direction& a, double p,
                                           std::uint64_t samples, std::uint64_t seed,
                                           double guard_se) {
    if (!(p > 5.0)) {
        throw PreconditionError("equicontinuity (sections) requires p > 5");
    }
    const auto w = a.coords();
    const std::size_t n = w.size();
    const SectionRadiusLaw law{Exponent::finite(p)};
    const double prefactor = gamma_fn(1.0 + 1.0 / p);
    const RngStream stream{seed};
    // Shared sphere draws couple the two sides; the difference has far
    // smaller variance than either side alone.
    const auto moments = indexed_sum<McMoments>(samples, [&](std::uint64_t i) {
        CounterRng rng = stream.at(i);
        double ix = 0.0, iy = 0.0, iz = 0.0;
        std::array<std::array<double, 3>, 64> xs_buf;
        std::vector<std::array<double, 3>> xs_heap;
        const bool small = n <= xs_buf.size();
        if (!small) xs_heap.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            const auto xi = rng.sphere3();
            (small ? xs_buf[j] : xs_heap[j]) = xi;
            ix += w[j] * xi[0];
            iy += w[j] * xi[1];
            iz += w[j] * xi[2];
        }
        double px = 0.0, py = 0.0, pz = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const auto& xi = small ? xs_buf[j] : xs_heap[j];
            const double cr = w[j] * law.sample(rng);
            px += cr * xi[0];
            py += cr * xi[1];
            pz += cr * xi[2];
        }
        const double v_inf = 1.0 / std::sqrt(ix * ix + iy * iy + iz * iz);
        const double v_p = prefactor / std::sqrt(px * px + py * py + pz * pz);
        return v_p - v_inf;
    });
    const MCEstimate diff = finalize(moments, samples, seed, false);
    return mc_verdict_le(LemmaId::EquicontinuitySection, {{"p", p}, {"n", double(n)}},
                         std::fabs(diff.mean), guard_se * diff.std_error, 5.0 / p);
}

LemmaVerdict check_equicontinuity_projections(const Direction& a, Exponent q,
                                              std::uint64_t samples, std::uint64_t seed,
                                              double guard_se) {
    if (q.is_infinite() || !(q.value() > 1.0) || !(q.value() < 2.0)) {
        throw PreconditionError("equicontinuity (projections) requires q in (1, 2)");
    }
    const auto w = a.coords();
    const std::size_t n = w.size();
    const ProjectionFactorLaw law(q);
    const RngStream stream{seed};
    const auto moments = indexed_sum<McMoments>(samples, [&](std::uint64_t i) {
        CounterRng rng = stream.at(i);
        double t = 0.0;
        for (std::size_t j = 0; j < n; ++j) t += w[j] * law.sample(rng);
        return std::fabs(t);
    });
    const MCEstimate x_side = finalize(moments, samples, seed, false);

    double eps_side;
    double eps_band = 0.0;
    if (n <= 24) {
        eps_side = khinchin_exact(a);
    } else {
        ProjectionQuery pq(a, Exponent::finite(1.0), samples, seed ^ 0x72616465ull);
        const MCEstimate est = estimate_projection_ratio(pq);
        eps_side = est.mean;
        eps_band = est.std_error;
    }
    const double band = guard_se * std::sqrt(x_side.std_error * x_side.std_error +
                                             eps_band * eps_band);
    const double bound = 3.0 * (1.0 - 1.0 / q.value());
    return mc_verdict_le(LemmaId::EquicontinuityProjection,
                         {{"q", q.value()}, {"n", double(n)}},
                         std::fabs(x_side.mean - eps_side), band, bound);
}

LemmaVerdict check_prop_main_section(const CaseTwoConfig& cfg, std::uint64_t samples,
                                     std::uint64_t seed, double guard_se) {
    if (!cfg.section_side()) {
        throw PreconditionError("check_prop_main_section needs a section-side config");
    }
    cfg.validate();
    const double a1 = cfg.direction()[0];
    const double a2 = cfg.direction()[1];
    const double alpha = cfg.alpha();
    const double rhs = 1.5 * alpha * alpha;
    std::map<std::string, double> params{
        {"p", cfg.exponent()}, {"c", cfg.c()}, {"L", cfg.L()}, {"alpha", alpha}};
    if (alpha == 0.0) {
        return mc_verdict_ge(LemmaId::SectionCoreBound, std::move(params), 0.0, 0.0, 0.0);
    }
    const SectionRadiusLaw law{Exponent::finite(cfg.exponent())};
    const RngStream stream{seed};
    // Conditionally on (R1, R2), |X| has density 2x/(M^2 - m^2) between
    // m = |a1 R1 - a2 R2| and M = a1 R1 + a2 R2, so the positive part
    // integrates in closed form and only the radial pair is sampled.
    const auto moments = indexed_sum<McMoments>(samples, [&](std::uint64_t i) {
        CounterRng rng = stream.at(i);
        const double r1 = law.sample(rng);
        const double r2 = law.sample(rng);
        const double m = std::fabs(a1 * r1 - a2 * r2);
        if (m >= alpha) return 0.0;
        const double big = a1 * r1 + a2 * r2;
        const double beta = std::min(alpha, big);
        const double span2 = 4.0 * a1 * a2 * r1 * r2;  // M^2 - m^2
        return 2.0 * ((beta - m) - (beta * beta - m * m) / (2.0 * alpha)) / span2;
    });
    const MCEstimate est = finalize(moments, samples, seed, false);
    return mc_verdict_ge(LemmaId::SectionCoreBound, std::move(params), est.mean,
                         guard_se * est.std_error, rhs);
}

LemmaVerdict check_prop_main_projection(const CaseTwoConfig& cfg, std::uint64_t samples,
                                        std::uint64_t seed, double guard_se) {
    if (cfg.section_side()) {
        throw PreconditionError("check_prop_main_projection needs a projection-side config");
    }
    cfg.validate();
    const double a1 = cfg.direction()[0];
    const double a2 = cfg.direction()[1];
    const double alpha = cfg.alpha();
    const double rhs = 0.75 * alpha * alpha;
    std::map<std::string, double> params{
        {"q", cfg.exponent()}, {"c", cfg.c()}, {"L", cfg.L()}, {"alpha", alpha}};
    if (alpha == 0.0) {
        return mc_verdict_ge(LemmaId::ProjectionCoreBound, std::move(params), 0.0, 0.0, 0.0);
    }
    const ProjectionFactorLaw law{Exponent::finite(cfg.exponent())};
    const RngStream stream{seed};
    // The two sign patterns of (eps1, eps2) that matter give |X| equal to
    // |a1 w1 +/- a2 w2| with probability 1/2 each; average them exactly.
    const auto moments = indexed_sum<McMoments>(samples, [&](std::uint64_t i) {
        CounterRng rng = stream.at(i);
        const double w1 = law.sample_abs(rng);
        const double w2 = law.sample_abs(rng);
        const double plus = alpha - std::fabs(a1 * w1 + a2 * w2);
        const double minus = alpha - std::fabs(a1 * w1 - a2 * w2);
        return 0.5 * (std::max(plus, 0.0) + std::max(minus, 0.0));
    });
    const MCEstimate est = finalize(moments, samples, seed, false);
    return mc_verdict_ge(LemmaId::ProjectionCoreBound, std::move(params), est.mean,
                         guard_se * est.std_error, rhs);
}

double cp_value(double p) {
    return std::exp2(0.5 - 1.0 / p) / gamma_fn(1.0 + 1.0 / p);
}

LemmaVerdict cp_bounds_check(double p) {
    if (!(1.0 / p < 1e-6)) {
        throw PreconditionError("cp sandwich is stated for 1/p < 1e-6");
    }
    const double v = cp_value(p);
    LemmaVerdict out;
    out.id = LemmaId::CpSandwich;
    out.params = {{"p", p}};
    out.lhs = v;
    out.rhs = 1.41;
    out.slack = std::min(v - 1.41, 1.42 - v);
    out.status = (v > 1.41 && v < 1.42) ? VerdictStatus::Pass : VerdictStatus::Fail;
    return out;
}

LemmaVerdict cq_bounds_check(Exponent q) {
    if (q.is_infinite() || !(1.0 - 1.0 / q.value() < 1e-5)) {
        throw PreconditionError("cq sandwich is stated for 1 - 1/q < 1e-5");
    }
    const double v = szarek_value(q);
    LemmaVerdict out;
    out.id = LemmaId::CqSandwich;
    out.params = {{"q", q.value()}};
    out.lhs = v;
    out.rhs = 0.7;
    out.slack = std::min(v - 0.7, 0.71 - v);
    out.status = (v > 0.7 && v < 0.71) ? VerdictStatus::Pass : VerdictStatus::Fail;
    return out;
}

MCEstimate radial_pair_event_probability(double p, double alpha, std::uint64_t samples,
                                         std::uint64_t seed) {
    const SectionRadiusLaw law{Exponent::finite(p)};
    const RngStream stream{seed};
    const auto moments = indexed_sum<McMoments>(samples, [&](std::uint64_t i) {
        CounterRng rng = stream.at(i);
        const double r1 = law.sample(rng);
        const double r2 = law.sample(rng);
        return (r1 <= 1.0 && std::fabs(r1 - r2) < alpha) ? 1.0 : 0.0;
    });
    return finalize(moments, samples, seed, false);
}

double angular_event_probability(double a1, double a2, double alpha) {
    if (!(a1 > 0.0) || !(a2 > 0.0) || !(alpha > 0.0)) {
        throw PreconditionError("angular event requires positive a1, a2, alpha");
    }
    const double t = (alpha * alpha / 16.0 - a1 * a1 - a2 * a2) / (2.0 * a1 * a2);
    if (!(t > -1.0) || !(t < 1.0)) {
        throw PreconditionError("angular event threshold outside the two-atom support");
    }
    const double gap = a1 - a2;
    return (alpha * alpha / 16.0 - gap * gap) / (4.0 * a1 * a2);
}

MCEstimate angular_event_probability_mc(double a1, double a2, double alpha,
                                        std::uint64_t samples, std::uint64_t seed) {
    const RngStream stream{seed};
    const double cut = alpha / 4.0;
    const auto moments = indexed_sum<McMoments>(samples, [&](std::uint64_t i) {
        CounterRng rng = stream.at(i);
        const auto x1 = rng.sphere3();
        const auto x2 = rng.sphere3();
        const double sx = a1 * x1[0] + a2 * x2[0];
        const double sy = a1 * x1[1] + a2 * x2[1];
        const double sz = a1 * x1[2] + a2 * x2[2];
        return (sx * sx + sy * sy + sz * sz < cut * cut) ? 1.0 : 0.0;
    });
    return finalize(moments, samples, seed, false);
}

}  // namespace slice
