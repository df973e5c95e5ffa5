#include <doctest.h>

#include <cmath>
#include <vector>

#include "slice/inequality_lab.hpp"
#include "slice/special.hpp"
#include "test_util.hpp"

using namespace slice;

namespace {
constexpr double kSqrt2 = 1.41421356237309504880;

Direction near_extremizer_n4(double delta) {
    const double s = (2.0 - delta) / (2.0 * kSqrt2);
    const double rest = std::sqrt((1.0 - 2.0 * s * s) / 2.0);
    return Direction({s, s, rest, rest});
}
}  // namespace

TEST_CASE("power-mean deficit: equality, spot value, random sweep") {
    {
        const LemmaVerdict v = check_p_means_deficit(2.0, 4.0, 0.8, 0.8);
        CHECK(v.pass());
        CHECK(v.slack == 0.0);
    }
    {
        const LemmaVerdict v = check_p_means_deficit(2.0, 4.0, 1.0, 0.6);
        CHECK(v.pass());
        // Independent oracle: direct evaluation of both sides.
        const double lhs = std::pow((1.0 + std::pow(0.6, 4.0)) / 2.0, 0.25);
        const double rhs = 0.8 + 3.0 * (1.0 - std::exp(-1.0)) / 8.0 * 0.16;
        CHECK(v.lhs == doctest::Approx(lhs).epsilon(1e-12));
        CHECK(v.rhs == doctest::Approx(rhs).epsilon(1e-12));
    }
    testutil::TestRng rng(61);
    int passes = 0;
    for (int i = 0; i < 10'000; ++i) {
        const double sigma = rng.uniform(0.05, 6.0);
        const double r = std::max(sigma, 2.0) * rng.uniform(1.0, 200.0);
        const double b1 = rng.uniform(0.01, 1.0);
        const double b2 = b1 * (1.0 - sigma / r * rng.uniform(0.0, 1.0));
        const LemmaVerdict v = check_p_means_deficit(sigma, r, b1, b2);
        if (v.pass()) ++passes;
    }
    CHECK(passes == 10'000);
    CHECK_THROWS_AS(check_p_means_deficit(2.0, 1.5, 0.8, 0.8), PreconditionError);
    CHECK_THROWS_AS(check_p_means_deficit(2.0, 4.0, 0.8, 0.2), PreconditionError);
    CHECK_THROWS_AS(check_p_means_deficit(2.0, 4.0, 1.2, 1.1), PreconditionError);
}

TEST_CASE("near-pair gap: equality, worked example, grid sweep") {
    {
        const double s = 1.0 / kSqrt2 - 1e-4;
        const LemmaVerdict v = check_a1a2(1.0, 100.0, s, s);
        CHECK(v.pass());
        CHECK(v.lhs == 0.0);
    }
    {
        // Offset pair scaled back onto the admissible p-norm cap.
        const double p = 100.0, c = 1.0;
        double a1 = 1.0 / kSqrt2 + 0.005;
        double a2 = 1.0 / kSqrt2 - 0.006;
        const double cap = std::exp2(1.0 / p - 0.5);
        const double norm =
            a1 * std::exp(std::log1p(std::exp(p * std::log(a2 / a1))) / p);
        if (norm > cap) {
            const double scale = cap / norm * (1.0 - 1e-13);
            a1 *= scale;
            a2 *= scale;
        }
        const LemmaVerdict v = check_a1a2(c, p, a1, a2);
        CHECK(v.pass());
        CHECK(v.lhs > 0.0);
    }
    testutil::TestRng rng(62);
    for (double p : {50.0, 1e3, 1e6}) {
        int tested = 0, passed = 0;
        for (int i = 0; i < 3400 && tested < 2000; ++i) {
            const double c = rng.uniform(1.0, 5.0);
            if (!(p > 4.0 * kSqrt2 * c)) continue;
            const double off = c / p;
            double a1 = 1.0 / kSqrt2 + off * rng.uniform(-1.0, 1.0);
            double a2 = 1.0 / kSqrt2 + off * rng.uniform(-1.0, 1.0);
            if (a2 > a1) std::swap(a1, a2);
            const double cap = std::exp2(1.0 / p - 0.5);
            const double norm =
                a1 * std::exp(std::log1p(std::exp(p * std::log(a2 / a1))) / p);
            if (norm > cap) {
                const double scale = cap / norm * (1.0 - 1e-13);
                a1 *= scale;
                a2 *= scale;
                if (std::fabs(a1 - 1.0 / kSqrt2) > off ||
                    std::fabs(a2 - 1.0 / kSqrt2) > off) {
                    continue;
                }
            }
            ++tested;
            if (check_a1a2(c, p, a1, a2).pass()) ++passed;
        }
        CHECK(tested >= 1000);
        CHECK(passed == tested);
    }
    CHECK_THROWS_AS(check_a1a2(0.5, 100.0, 0.7, 0.7), PreconditionError);
    CHECK_THROWS_AS(check_a1a2(1.0, 100.0, 0.8, 0.7), PreconditionError);
}

TEST_CASE("radial L2 bound: grid, asymptote, determinism") {
    for (double p : {5.01, 10.0, 100.0, 1e6}) {
        const LemmaVerdict v = check_R_L2(p);
        CHECK(v.pass());
    }
    // lhs/rhs -> Gamma''(1)/2 ~ 0.989 as p grows.
    const LemmaVerdict big = check_R_L2(1e6);
    CHECK(big.lhs / big.rhs == doctest::Approx(0.98905).epsilon(1e-3));
    // Bit-identical repeats.
    const LemmaVerdict v1 = check_R_L2(10.0);
    const LemmaVerdict v2 = check_R_L2(10.0);
    CHECK(v1.lhs == v2.lhs);
    CHECK(v1.rhs == v2.rhs);
    CHECK(v1.slack == v2.slack);
    CHECK_THROWS_AS(check_R_L2(5.0), PreconditionError);
}

TEST_CASE("sign coupling bound: limit, grid, closed form") {
    // q -> 1+: the factor approaches a pure sign and the L2 gap vanishes.
    CHECK(check_coupling(1.0001).lhs <= 1e-6);
    for (double q : {1.1, 1.5, 1.9, 1.99}) {
        const LemmaVerdict v = check_coupling(q);
        CHECK(v.pass());
        // Oracle: E|X - sgn X|^2 = (Gamma(2-1/q) - 2 + Gamma(1/q)) / Gamma(1/q).
        const double direct =
            (std::tgamma(2.0 - 1.0 / q) - 2.0 + std::tgamma(1.0 / q)) / std::tgamma(1.0 / q);
        CHECK(v.lhs == doctest::Approx(direct).epsilon(1e-9));
    }
    CHECK_THROWS_AS(check_coupling(1.0), PreconditionError);
    CHECK_THROWS_AS(check_coupling(2.0), PreconditionError);
}

TEST_CASE("section equicontinuity: anchors and sweep") {
    {
        const LemmaVerdict v = check_equicontinuity_sections(Direction({1.0, 0.0}), 20.0,
                                                             200'000, 71);
        CHECK(v.pass());
    }
    {
        // Both values in closed form at the extremal pair direction:
        // |2^(1/2-1/p) - sqrt(2)| must sit under 5/p with room.
        const LemmaVerdict v = check_equicontinuity_sections(Direction({1.0, 1.0}), 20.0,
                                                             400'000, 72);
        CHECK(v.pass());
        const double closed = std::fabs(std::exp2(0.5 - 0.05) - kSqrt2);
        CHECK(closed <= 0.25);
        CHECK(std::fabs(v.lhs - closed) <= 0.02);
    }
    testutil::TestRng rng(63);
    int inconclusive = 0;
    for (double p : {10.0, 50.0, 100.0}) {
        for (int i = 0; i < 5; ++i) {
            const int n = rng.uniform_int(2, 8);
            std::vector<double> v(n);
            for (double& c : v) c = rng.uniform(0.05, 1.0);
            const LemmaVerdict verdict = check_equicontinuity_sections(
                Direction(std::move(v)), p, 150'000, 7300 + i);
            CHECK(verdict.status != VerdictStatus::Fail);
            if (verdict.status == VerdictStatus::Inconclusive) ++inconclusive;
        }
    }
    CHECK(inconclusive == 0);
    CHECK_THROWS_AS(check_equicontinuity_sections(Direction({1.0}), 4.0, 10'000, 1),
                    PreconditionError);
}

TEST_CASE("projection equicontinuity: anchors and sweep") {
    {
        // a = e1: difference is |1/Gamma(1/q) - 1| in closed form.
        const Exponent q = Exponent::finite(1.3);
        const LemmaVerdict v = check_equicontinuity_projections(Direction({1.0, 0.0}), q,
                                                                200'000, 73);
        CHECK(v.pass());
        const double closed = std::fabs(1.0 / std::tgamma(1.0 / 1.3) - 1.0);
        CHECK(closed <= 3.0 * (1.0 - 1.0 / 1.3));
        CHECK(std::fabs(v.lhs - closed) <= 0.02);
    }
    {
        // q near 1: both the bound and the difference collapse.
        const LemmaVerdict v = check_equicontinuity_projections(
            Direction({0.8, 0.6}), Exponent::finite(1.01), 200'000, 74);
        CHECK(v.pass());
        CHECK(v.rhs == doctest::Approx(3.0 * (1.0 - 1.0 / 1.01)).epsilon(1e-12));
    }
    testutil::TestRng rng(64);
    int inconclusive = 0;
    for (double q : {1.05, 1.2, 1.4}) {
        for (int i = 0; i < 5; ++i) {
            const int n = rng.uniform_int(2, 8);
            std::vector<double> v(n);
            for (double& c : v) c = rng.uniform(0.05, 1.0);
            const LemmaVerdict verdict = check_equicontinuity_projections(
                Direction(std::move(v)), Exponent::finite(q), 150'000, 7400 + i);
            CHECK(verdict.status != VerdictStatus::Fail);
            if (verdict.status == VerdictStatus::Inconclusive) ++inconclusive;
        }
    }
    CHECK(inconclusive == 0);
}

TEST_CASE("case-two configs validate their hypotheses") {
    const Direction good = near_extremizer_n4(1e-12);
    CHECK_NOTHROW(CaseTwoConfig::section(good, 1e6, 2.0, 1000.0).validate());
    // Far-from-extremizer direction violates sqrt(deficit) < c/p.
    const Direction far({0.9, 0.3, 0.3, 0.077});
    CHECK_THROWS_AS(CaseTwoConfig::section(far, 1e6, 2.0, 1000.0).validate(),
                    PreconditionError);
    // L too small.
    CHECK_THROWS_AS(CaseTwoConfig::section(good, 1e6, 2.0, 100.0).validate(),
                    PreconditionError);
    // p below the L*c + 2 threshold.
    CHECK_THROWS_AS(CaseTwoConfig::section(good, 1500.0, 2.0, 1000.0).validate(),
                    PreconditionError);
    // Wrong-side dispatch.
    CHECK_THROWS_AS(
        check_prop_main_projection(CaseTwoConfig::section(good, 1e6, 2.0, 1000.0), 10'000, 1),
        PreconditionError);
}

TEST_CASE("core section bound at desk scale") {
    for (double p : {1e4, 1e6}) {
        const double c = 2.0, L = 1000.0;
        const double delta = 0.25 * (c / p) * (c / p);
        const CaseTwoConfig cfg = CaseTwoConfig::section(near_extremizer_n4(delta), p, c, L);
        const LemmaVerdict v = check_prop_main_section(cfg, 400'000, 75);
        CHECK(v.pass());
        CHECK(v.lhs > v.rhs);
    }
}

TEST_CASE("core projection bound at desk scale") {
    for (double qv : {1.0 + 1e-5, 1.0 + 1e-7}) {
        const double c = 2.0, L = 1000.0;
        const double p = qv / (qv - 1.0);
        const double delta = 0.25 * (c / p) * (c / p);
        const CaseTwoConfig cfg =
            CaseTwoConfig::projection(near_extremizer_n4(delta), qv, c, L);
        const LemmaVerdict v = check_prop_main_projection(cfg, 400'000, 76);
        CHECK(v.pass());
    }
    // alpha = 0 edge: sqrt(0.5) rounds up, so a1^2 + a2^2 lands just
    // above 1 and the clamp pins alpha to exactly zero.
    const double qv = 1.0 + 1e-5;
    const double s = std::sqrt(0.5);
    const CaseTwoConfig edge =
        CaseTwoConfig::projection(Direction({s, s}), qv, 2.0, 1000.0);
    REQUIRE(edge.alpha() == 0.0);
    const LemmaVerdict v = check_prop_main_projection(edge, 10'000, 77);
    CHECK(v.pass());
    CHECK(v.lhs == 0.0);
    CHECK(v.rhs == 0.0);
}

TEST_CASE("radial pair event probability clears the trapezoid bound") {
    for (auto [p, alpha] : std::vector<std::pair<double, double>>{
             {100.0, 0.02}, {100.0, 0.004}, {1e4, 2e-4}, {1e4, 4e-5}}) {
        const MCEstimate est = radial_pair_event_probability(p, alpha, 400'000, 78);
        const double bound = std::min(1.0 / 64.0, p * alpha / 32.0);
        CHECK(est.mean >= bound - 4.0 * est.std_error);
    }
}

TEST_CASE("angular event: closed form against sphere Monte Carlo") {
    const double a1 = 0.705, a2 = 0.705, alpha = 0.3;
    const double closed = angular_event_probability(a1, a2, alpha);
    CHECK(closed == doctest::Approx((alpha * alpha / 16.0) / (4.0 * a1 * a2)).epsilon(1e-12));
    const MCEstimate mc = angular_event_probability_mc(a1, a2, alpha, 1u << 21, 79);
    CHECK(std::fabs(mc.mean - closed) <= 4.0 * mc.std_error);
    // Condition violations reject.
    CHECK_THROWS_AS(angular_event_probability(0.9, 0.1, 0.01), PreconditionError);
}

TEST_CASE("C_p and c_q sandwiches") {
    CHECK(cp_value(2.0) == doctest::Approx(1.0 / std::tgamma(1.5)).epsilon(1e-13));
    const LemmaVerdict vp = cp_bounds_check(1e7);
    CHECK(vp.pass());
    CHECK(vp.lhs > 1.41);
    CHECK(vp.lhs < 1.42);
    CHECK_THROWS_AS(cp_bounds_check(1e5), PreconditionError);

    const LemmaVerdict vq = cq_bounds_check(Exponent::finite(1.0 / (1.0 - 1e-6)));
    CHECK(vq.pass());
    CHECK(vq.lhs > 0.7);
    CHECK(vq.lhs < 0.71);
    CHECK_THROWS_AS(cq_bounds_check(Exponent::finite(1.5)), PreconditionError);
}
