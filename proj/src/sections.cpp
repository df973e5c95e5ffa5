#include "slice/sections.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "mc_detail.hpp"
#include "slice/parallel.hpp"

namespace slice {

using detail::finalize;
using detail::McMoments;

namespace {
constexpr double kPi = 3.14159265358979323846;
}  // namespace

SectionQuery::SectionQuery(Direction a_, Exponent p_, std::uint64_t samples_,
                           std::uint64_t seed_)
    : a(std::move(a_)), p(p_), samples(samples_), seed(seed_) {
    // Estimates get compared against bounds downstream; refuse sample
    // counts too small for the standard error to mean anything.
    if (samples < 1000) {
        throw InvalidInputError("section query needs samples >= 1000");
    }
}

MCEstimate estimate_section_ratio(const SectionQuery& query) {
    const auto w = query.a.coords();
    const std::size_t n = w.size();
    const bool finite_p = !query.p.is_infinite();
    const double prefactor = finite_p ? gamma_fn(1.0 + 1.0 / query.p.value()) : 1.0;
    const double inv_p = query.p.inverse();
    const double shape = 1.0 + inv_p;
    const RngStream stream{query.seed};

    const auto moments = indexed_sum<McMoments>(query.samples, [&](std::uint64_t i) {
        CounterRng rng = stream.at(i);
        double sx = 0.0, sy = 0.0, sz = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const auto xi = rng.sphere3();
            double c = w[j];
            if (finite_p) {
                c *= std::exp(rng.log_gamma_variate(shape) * inv_p);
            }
            sx += c * xi[0];
            sy += c * xi[1];
            sz += c * xi[2];
        }
        return prefactor / std::sqrt(sx * sx + sy * sy + sz * sz);
    });
    return finalize(moments, query.samples, query.seed, true);
}

double exact_section_ratio_2d(const Direction& a, Exponent p) {
    if (a.dim() != 2) {
        throw DimensionError("exact_section_ratio_2d requires n = 2");
    }
    return 1.0 / a.norm(p);
}

double ball_direction_value(Exponent p) {
    return std::exp2(0.5 - p.inverse());
}

namespace {

// sin(x)/x with the removable singularity.
inline double sinc(double x) {
    if (std::fabs(x) < 1e-8) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

// 20-point Gauss-Legendre on [a, b] (nodes mirrored around the center).
constexpr double kGlX[10] = {
    0.076526521133497333755, 0.227785851141645078080, 0.373706088715419560673,
    0.510867001950827098004, 0.636053680726515025453, 0.746331906460150792614,
    0.839116971822218823395, 0.912234428251325905868, 0.963971927277913791268,
    0.993128599185094924786,
};
constexpr double kGlW[10] = {
    0.152753387130725850698, 0.149172986472603746788, 0.142096109318382051329,
    0.131688638449176626898, 0.118194531961518417312, 0.101930119817240435037,
    0.083276741576704748725, 0.062672048334109063570, 0.040601429800386941331,
    0.017614007139152118312,
};

}  // namespace

double cube_section_fourier(const Direction& a, const QuadratureSpec& spec) {
    // Coordinates this small move the volume by O(eps) at most and would
    // stall the t^-k tail; the support is renormalized to unit length.
    constexpr double kDropCutoff = 1e-9;
    std::vector<double> w;
    double norm2 = 0.0;
    for (double c : a.coords()) {
        if (c > kDropCutoff) {
            w.push_back(c);
            norm2 += c * c;
        }
    }
    if (w.empty() || w.size() == 1) return 1.0;
    const double scale = 1.0 / std::sqrt(norm2);
    for (double& c : w) c *= scale;
    if (w.size() == 2) return 1.0 / w[0];  // chord of the unit square

    const auto f = [&](double t) {
        double prod = 1.0;
        for (double c : w) prod *= sinc(0.5 * c * t);
        return prod;
    };

    // Blocks between consecutive zeros of the fastest factor sin(w0 t/2).
    const double block_len = 2.0 * kPi / w[0];
    double integral = 0.0;
    double comp = 0.0;
    for (int m = 0; m < spec.max_periods; ++m) {
        const double lo = m * block_len;
        const double hi = lo + block_len;
        const double c = 0.5 * (lo + hi);
        const double h = 0.5 * (hi - lo);
        double piece = 0.0;
        for (int i = 0; i < 10; ++i) {
            const double dx = h * kGlX[i];
            piece += kGlW[i] * (f(c + dx) + f(c - dx));
        }
        piece *= h;
        const double y = piece - comp;
        const double t = integral + y;
        comp = (t - integral) - y;
        integral = t;

        if (m >= 4) {
            double bound = 1.0;
            int decaying = 0;
            for (double cj : w) {
                const double r = 2.0 / (cj * hi);
                if (r < 1.0) {
                    bound *= r;
                    ++decaying;
                }
            }
            if (decaying >= 2) {
                const double tail = bound * hi / (decaying - 1) / kPi;
                if (tail < 0.5 * spec.abs_tol) {
                    return integral / kPi;
                }
            }
        }
    }
    throw AccuracyError("cube_section_fourier: tail bound not met within max_periods");
}

double busemann_norm(std::span<const double> x, const QuadratureSpec& spec) {
    double norm2 = 0.0;
    for (double c : x) norm2 += c * c;
    if (norm2 == 0.0) {
        throw InvalidInputError("busemann_norm requires a nonzero vector");
    }
    const Direction a(std::vector<double>(x.begin(), x.end()));
    double vol;
    if (a.support_size() <= 8) {
        vol = cube_section_fourier(a, spec);
    } else {
        SectionQuery q(a, Exponent::infinity(), 1u << 20, 0x657175696Eull);
        vol = estimate_section_ratio(q).mean;
    }
    return std::sqrt(norm2) / vol;
}

double two_atom_inverse_moment(double x1, double x2) {
    if (!(x1 > 0.0) || !(x2 > 0.0)) {
        throw InvalidInputError("two_atom_inverse_moment requires positive arguments");
    }
    return 1.0 / std::max(x1, x2);
}

std::pair<MCEstimate, MCEstimate> konig_kwapien_check(std::span<const double> x, double s,
                                                      std::uint64_t samples,
                                                      std::uint64_t seed) {
    if (!(s > -1.0) || s == 0.0) {
        throw InvalidInputError("konig_kwapien_check requires s > -1 and s != 0");
    }
    const std::size_t n = x.size();
    const std::vector<double> w(x.begin(), x.end());

    const RngStream sphere_stream{seed};
    const auto lhs = indexed_sum<McMoments>(samples, [&](std::uint64_t i) {
        CounterRng rng = sphere_stream.at(i);
        double sx = 0.0, sy = 0.0, sz = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const auto xi = rng.sphere3();
            sx += w[j] * xi[0];
            sy += w[j] * xi[1];
            sz += w[j] * xi[2];
        }
        return std::pow(sx * sx + sy * sy + sz * sz, 0.5 * s);
    });

    const RngStream uni_stream{seed ^ 0x9E3779B97F4A7C15ull};
    const auto rhs = indexed_sum<McMoments>(samples, [&](std::uint64_t i) {
        CounterRng rng = uni_stream.at(i);
        double t = 0.0;
        for (std::size_t j = 0; j < n; ++j) t += w[j] * rng.uniform_sym();
        return (1.0 + s) * std::pow(std::fabs(t), s);
    });

    return {finalize(lhs, samples, seed, false), finalize(rhs, samples, seed, false)};
}

double ball_volume(std::size_t n, Exponent p) {
    if (n == 0) return 1.0;
    if (p.is_infinite()) return std::exp2(static_cast<double>(n));
    const double inv_p = 1.0 / p.value();
    const double nn = static_cast<double>(n);
    return std::exp(nn * (std::log(2.0) + log_gamma(1.0 + inv_p)) -
                    log_gamma(1.0 + nn * inv_p));
}

MCEstimate section_volume_absolute(const Direction& a, Exponent p, std::uint64_t samples,
                                   std::uint64_t seed) {
    SectionQuery q(a, p, samples, seed);
    MCEstimate est = estimate_section_ratio(q);
    const double factor = ball_volume(a.dim() - 1, p);
    est.mean *= factor;
    est.std_error *= factor;
    return est;
}

}  // namespace slice
