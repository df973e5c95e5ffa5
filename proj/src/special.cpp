#include "slice/special.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace slice {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos g = 7, 9 terms (Godfrey's coefficients). Good for ~15
// significant digits over the positive reals.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos_log_gamma(double x) {
    // Valid for x >= 0.5; callers reflect smaller arguments. Extended
    // precision keeps the (x-1/2)log(base) term from eating the 1e-13
    // budget at the top of the range.
    const long double lx = x;
    long double acc = kLanczos[0];
    for (std::size_t k = 1; k < kLanczos.size(); ++k) {
        acc += static_cast<long double>(kLanczos[k]) / (lx - 1.0L + static_cast<long double>(k));
    }
    const long double base = lx + static_cast<long double>(kLanczosG) - 0.5L;
    const long double r = 0.91893853320467274178L  // log(2 pi)/2
                          + (lx - 0.5L) * std::log(base) - base + std::log(acc);
    return static_cast<double>(r);
}

// zeta(2..kZetaMax) by Euler-Maclaurin; feeds the log Gamma(1+x) series.
constexpr int kZetaMax = 48;

std::vector<double> compute_zetas() {
    std::vector<double> z(kZetaMax + 1, 0.0);
    const int m = 50;
    for (int k = 2; k <= kZetaMax; ++k) {
        double s = 0.0;
        for (int n = m - 1; n >= 1; --n) s += std::pow(n, -static_cast<double>(k));
        const double kk = k;
        const double mm = m;
        // Tail from n = m upward, Bernoulli corrections through B8.
        double tail = std::pow(mm, 1.0 - kk) / (kk - 1.0) + 0.5 * std::pow(mm, -kk);
        double deriv = kk * std::pow(mm, -kk - 1.0);
        tail += deriv / 12.0;
        deriv *= (kk + 1.0) * (kk + 2.0) / (mm * mm);
        tail -= deriv / 720.0;
        deriv *= (kk + 3.0) * (kk + 4.0) / (mm * mm);
        tail += deriv / 30240.0;
        deriv *= (kk + 5.0) * (kk + 6.0) / (mm * mm);
        tail -= deriv / 1209600.0;
        z[k] = s + tail;
    }
    return z;
}

const std::vector<double>& zetas() {
    static const std::vector<double> z = compute_zetas();
    return z;
}

constexpr double kEulerGamma = 0.57721566490153286061;

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("log_gamma requires x > 0");
    }
    if (x >= 0.5) return lanczos_log_gamma(x);
    // Reflection keeps accuracy for small arguments.
    return std::log(kPi / std::sin(kPi * x)) - lanczos_log_gamma(1.0 - x);
}

double gamma_fn(double x) { return std::exp(log_gamma(x)); }

double log_gamma1p(double x) {
    if (std::fabs(x) > 0.25) {
        return log_gamma(1.0 + x);
    }
    // log Gamma(1+x) = -gamma x + sum_{k>=2} (-1)^k zeta(k) x^k / k.
    const auto& z = zetas();
    double term = -x;  // (-x)^k accumulator
    double acc = -kEulerGamma * x;
    for (int k = 2; k <= kZetaMax; ++k) {
        term *= -x;
        const double add = z[k] * term / k;
        acc += add;
        if (std::fabs(add) < 1e-20 * (std::fabs(acc) + 1e-30)) break;
    }
    return acc;
}

double haagerup_F(double s) {
    if (!(s > 0.0)) {
        throw std::domain_error("haagerup_F requires s > 0");
    }
    const double x = 0.5 * s;
    double log_ratio;  // log Gamma(x + 1/2) - log Gamma(x)
    if (x >= 5e6) {
        // Direct differencing of two huge logs loses the ratio; use the
        // asymptotic Gamma(x+1/2)/Gamma(x) = sqrt(x)(1 - 1/(8x) + ...).
        const double corr = 1.0 - 1.0 / (8.0 * x) + 1.0 / (128.0 * x * x)
                            + 5.0 / (3072.0 * x * x * x);
        log_ratio = 0.5 * std::log(x) + std::log(corr);
    } else {
        log_ratio = log_gamma(x + 0.5) - log_gamma(x);
    }
    return 2.0 / std::sqrt(kPi * s) * std::exp(log_ratio);
}

double haagerup_F_limit() { return std::sqrt(2.0 / kPi); }

namespace {

// |sin t / t|^s with the removable singularity at 0 and clean zeros.
double sinc_pow(double t, double s) {
    if (t == 0.0) return 1.0;
    const double r = std::sin(t) / t;
    if (r <= 0.0) return 0.0;
    return std::exp(s * std::log(r));
}

// (sin u)^s (k pi + u)^-s on u in [0, pi].
double period_integrand(double u, double k, double s) {
    const double sn = std::sin(u);
    if (sn <= 0.0) return 0.0;
    return std::exp(s * (std::log(sn) - std::log(k * kPi + u)));
}

// 20-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; mirror).
constexpr std::array<double, 10> kGl20X = {
    0.076526521133497333755, 0.227785851141645078080, 0.373706088715419560673,
    0.510867001950827098004, 0.636053680726515025453, 0.746331906460150792614,
    0.839116971822218823395, 0.912234428251325905868, 0.963971927277913791268,
    0.993128599185094924786,
};
constexpr std::array<double, 10> kGl20W = {
    0.152753387130725850698, 0.149172986472603746788, 0.142096109318382051329,
    0.131688638449176626898, 0.118194531961518417312, 0.101930119817240435037,
    0.083276741576704748725, 0.062672048334109063570, 0.040601429800386941331,
    0.017614007139152118312,
};

template <class F>
double gl20(F&& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t i = 0; i < kGl20X.size(); ++i) {
        const double dx = h * kGl20X[i];
        acc += kGl20W[i] * (f(c + dx) + f(c - dx));
    }
    return acc * h;
}

template <class F>
void adaptive_step(F& f, double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth, double& out) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double h = b - a;
    const double left = h / 12.0 * (fa + 4.0 * flm + fm);
    const double right = h / 12.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
        out += left + right + delta / 15.0;
        return;
    }
    adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, out);
    adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, out);
}

// Adaptive Simpson with an initial uniform split so narrow endpoint
// peaks (large s) are not missed by the first coarse panel.
template <class F>
double adaptive_simpson(F f, double a, double b, double tol, int initial_panels = 32) {
    double total = 0.0;
    const double h = (b - a) / initial_panels;
    for (int i = 0; i < initial_panels; ++i) {
        const double x0 = a + i * h;
        const double x1 = x0 + h;
        const double xm = 0.5 * (x0 + x1);
        const double f0 = f(x0), fm = f(xm), f1 = f(x1);
        const double whole = h / 6.0 * (f0 + 4.0 * fm + f1);
        adaptive_step(f, x0, x1, f0, fm, f1, whole, tol / initial_panels, 48, total);
    }
    return total;
}

}  // namespace

double ball_psi(double s, const QuadratureSpec& spec) {
    if (!(s >= 2.0)) {
        throw std::domain_error("ball_psi requires s >= 2");
    }
    if (!(spec.abs_tol > 0.0) || spec.max_periods < 1) {
        throw InvalidInputError("ball_psi: bad quadrature spec");
    }
    const double prefactor = 2.0 / kPi * std::sqrt(s);
    const double budget = spec.abs_tol / prefactor;

    // Head [0, pi]: smooth, value 1 at 0 (peaked there for large s).
    double integral = adaptive_simpson([s](double t) { return sinc_pow(t, s); },
                                       0.0, kPi, 0.25 * budget);

    // Full periods [k pi, (k+1) pi]. Each is a smooth nonnegative bump,
    // so fixed-order Gauss-Legendre is ample.
    const int n_periods = std::min(spec.max_periods, 64);
    double comp = 0.0;  // Kahan compensation
    for (int k = 1; k < n_periods; ++k) {
        const double kk = k;
        const double piece =
            gl20([kk, s](double u) { return period_integrand(u, kk, s); }, 0.0, kPi);
        const double y = piece - comp;
        const double t = integral + y;
        comp = (t - integral) - y;
        integral = t;
    }

    // Remainder sum_{k>=N} int_0^pi (sin u)^s (k pi + u)^-s du. The inner
    // sum over k is Hurwitz-like and smooth in u; Euler-Maclaurin through
    // the B4 term evaluates it to near machine precision for N = 64.
    const double n0 = n_periods;
    double em_error_bound = 0.0;
    const auto hurwitz_tail = [&](double u) {
        const double base = n0 * kPi + u;
        const double g0 = std::pow(base, -s);
        double v = base * g0 / (kPi * (s - 1.0));  // integral term
        v += 0.5 * g0;
        const double g1 = s * kPi * g0 / base;
        v += g1 / 12.0;
        const double g3 = g1 * (s + 1.0) * (s + 2.0) * kPi * kPi / (base * base);
        v -= g3 / 720.0;
        const double g5 = g3 * (s + 3.0) * (s + 4.0) * kPi * kPi / (base * base);
        if (g5 / 30240.0 > em_error_bound) em_error_bound = g5 / 30240.0;
        return v;
    };
    const double tail = gl20([&](double u) {
        const double sn = std::sin(u);
        if (sn <= 0.0) return 0.0;
        return std::exp(s * std::log(sn)) * hurwitz_tail(u);
    }, 0.0, kPi);
    if (em_error_bound * kPi > 0.25 * budget) {
        throw AccuracyError("ball_psi: tail bound cannot meet abs_tol within max_periods");
    }
    integral += tail;

    return prefactor * integral;
}

double gamma_second_difference(double x) {
    if (!(x > 0.0) || !(x < 1.0 / 3.0)) {
        throw std::domain_error("gamma_second_difference requires 0 < x < 1/3");
    }
    // expm1 on the series keeps the quadratic-order difference alive at
    // small x, where three direct Gamma calls would cancel to noise.
    const double g3 = std::expm1(log_gamma1p(3.0 * x));
    const double g2 = std::expm1(log_gamma1p(2.0 * x));
    const double g1 = std::expm1(log_gamma1p(x));
    return g3 - 2.0 * g2 + g1;
}

}  // namespace slice
