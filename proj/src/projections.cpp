#include "slice/projections.hpp"

#include <bit>
#include <cmath>
#include <vector>

#include "mc_detail.hpp"
#include "slice/parallel.hpp"
#include "slice/special.hpp"

namespace slice {

using detail::finalize;
using detail::McMoments;

ProjectionQuery::ProjectionQuery(Direction a_, Exponent q_, std::uint64_t samples_,
                                 std::uint64_t seed_)
    : a(std::move(a_)), q(q_), samples(samples_), seed(seed_) {
    if (q.is_infinite() || q.value() > 2.0) {
        throw InvalidInputError("projection query needs q in [1, 2]");
    }
    if (samples < 1000) {
        throw InvalidInputError("projection query needs samples >= 1000");
    }
}

namespace {

MCEstimate khinchin_mc(const Direction& a, std::uint64_t samples, std::uint64_t seed) {
    const auto w = a.coords();
    const std::size_t n = w.size();
    const RngStream stream{seed};
    const auto moments = indexed_sum<McMoments>(samples, [&](std::uint64_t i) {
        CounterRng rng = stream.at(i);
        double t = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            t += rng.uniform01() < 0.5 ? -w[j] : w[j];
        }
        return std::fabs(t);
    });
    return finalize(moments, samples, seed, true);
}

}  // namespace

MCEstimate estimate_projection_ratio(const ProjectionQuery& query) {
    const auto w = query.a.coords();
    const std::size_t n = w.size();

    if (query.q.value() == 1.0) {
        // Rademacher substitution; the Gamma(1/q) prefactor is 1 here.
        if (n <= 24) {
            MCEstimate est;
            est.mean = khinchin_exact(query.a);
            est.std_error = 0.0;
            est.samples = std::uint64_t{1} << (n - 1);
            est.seed = query.seed;
            return est;
        }
        return khinchin_mc(query.a, query.samples, query.seed);
    }

    const ProjectionFactorLaw law(query.q);
    const double prefactor = gamma_fn(1.0 / query.q.value());
    const RngStream stream{query.seed};
    const auto moments = indexed_sum<McMoments>(query.samples, [&](std::uint64_t i) {
        CounterRng rng = stream.at(i);
        double t = 0.0;
        for (std::size_t j = 0; j < n; ++j) t += w[j] * law.sample(rng);
        return prefactor * std::fabs(t);
    });
    return finalize(moments, query.samples, query.seed, true);
}

double exact_projection_ratio_2d(const Direction& a, Exponent q) {
    if (a.dim() != 2) {
        throw DimensionError("exact_projection_ratio_2d requires n = 2");
    }
    if (q.is_infinite() || q.value() < 1.0 || q.value() > 2.0) {
        throw InvalidInputError("exact_projection_ratio_2d requires q in [1, 2]");
    }
    return a.norm(q.dual());
}

double szarek_value(Exponent q) {
    if (q.is_infinite() || q.value() > 2.0) {
        throw InvalidInputError("szarek_value requires q in [1, 2]");
    }
    const double inv_q = 1.0 / q.value();
    return std::exp((0.5 - inv_q) * std::log(2.0) - log_gamma(inv_q));
}

double szarek_ratio_value(Exponent q) {
    if (q.is_infinite() || q.value() > 2.0) {
        throw InvalidInputError("szarek_ratio_value requires q in [1, 2]");
    }
    return std::exp2(0.5 - 1.0 / q.value());
}

double khinchin_exact(const Direction& a, int max_enum_n) {
    const auto w = a.coords();
    const std::size_t n = w.size();
    if (n > static_cast<std::size_t>(max_enum_n)) {
        throw DimensionError("khinchin_exact: dimension above enumeration cutoff");
    }
    // Gray-code walk over the 2^(n-1) sign patterns with eps_1 = +1.
    double cur = 0.0;
    for (double c : w) cur += c;
    std::vector<int> sign(n, 1);
    double total = std::fabs(cur);
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    for (std::uint64_t m = 1; m < count; ++m) {
        const int flip = std::countr_zero(m) + 1;  // coordinates 1..n-1
        cur -= 2.0 * sign[flip] * w[flip];
        sign[flip] = -sign[flip];
        total += std::fabs(cur);
    }
    return total / static_cast<double>(count);
}

double crosspolytope_projection(const Direction& a) {
    const std::size_t n = a.dim();
    double log_factorial = 0.0;
    for (std::size_t j = 2; j < n; ++j) log_factorial += std::log(static_cast<double>(j));
    const double scale = std::exp((n - 1) * std::log(2.0) - log_factorial);
    return scale * khinchin_exact(a);
}

double cube_projection(const Direction& a) {
    const std::size_t n = a.dim();
    if (n < 2) {
        throw DimensionError("cube_projection requires n >= 2");
    }
    return a.norm(Exponent::finite(1.0)) * std::exp2(static_cast<double>(n - 1));
}

std::pair<MCEstimate, MCEstimate> max_representation_check(const Direction& a,
                                                           std::size_t split, Exponent q,
                                                           std::uint64_t samples,
                                                           std::uint64_t seed) {
    const std::size_t n = a.dim();
    if (split < 1 || split >= n) {
        throw InvalidInputError("max_representation_check requires 1 <= split < n");
    }
    const ProjectionFactorLaw law(q);
    const auto w = a.coords();
    const RngStream stream{seed};

    struct PairMoments {
        McMoments sum;
        McMoments max;
        PairMoments& operator+=(const PairMoments& o) {
            sum += o.sum;
            max += o.max;
            return *this;
        }
    };
    const auto moments = indexed_sum<PairMoments>(samples, [&](std::uint64_t i) {
        CounterRng rng = stream.at(i);
        double x = 0.0, y = 0.0;
        for (std::size_t j = 0; j < split; ++j) x += w[j] * law.sample(rng);
        for (std::size_t j = split; j < n; ++j) y += w[j] * law.sample(rng);
        PairMoments m;
        m.sum += std::fabs(x + y);
        m.max += std::max(std::fabs(x), std::fabs(y));
        return m;
    });
    return {finalize(moments.sum, samples, seed, false),
            finalize(moments.max, samples, seed, false)};
}

}  // namespace slice
