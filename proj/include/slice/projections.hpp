#ifndef SLICE_PROJECTIONS_HPP
#define SLICE_PROJECTIONS_HPP

#include <utility>

#include "slice/distributions.hpp"
#include "slice/domain.hpp"

namespace slice {

struct ProjectionQuery {
    Direction a;
    Exponent q;  // in [1, 2]; q = 1 routes to exact sign enumeration
    std::uint64_t samples;
    std::uint64_t seed;

    ProjectionQuery(Direction a_, Exponent q_, std::uint64_t samples_, std::uint64_t seed_);
};

/// Normalized projection vol(Proj_{a-perp} B_q^n)/vol(B_q^{n-1}) as
/// Gamma(1/q) E|sum a_j X_j|. At q = 1 this is the Khinchin L1 moment
/// over random signs: exact enumeration for n <= 24, sign Monte Carlo
/// beyond.
MCEstimate estimate_projection_ratio(const ProjectionQuery& query);

/// Exact two-dimensional value: the dual norm |a|_{q/(q-1)}.
double exact_projection_ratio_2d(const Direction& a, Exponent q);

/// Szarek's constant as the bare moment c_q = E|(X1+X2)/sqrt(2)|
/// = 2^(1/2-1/q) / Gamma(1/q). Note the ratio-level constant carries an
/// extra Gamma(1/q); use szarek_ratio_value for that one.
double szarek_value(Exponent q);

/// Gamma(1/q) * c_q = 2^(1/2-1/q): the projection ratio at the extremal
/// direction, comparable with estimate_projection_ratio output.
double szarek_ratio_value(Exponent q);

/// E|sum a_j eps_j| by exact enumeration of the 2^(n-1) sign patterns
/// (the global flip is factored out). Throws DimensionError above the
/// cutoff; callers wanting big n use the Monte Carlo path explicitly.
double khinchin_exact(const Direction& a, int max_enum_n = 24);

/// vol(Proj_{a-perp} B_1^n) = 2^(n-1)/(n-1)! * E|sum a_j eps_j|.
double crosspolytope_projection(const Direction& a);

/// vol(Proj_{a-perp} B_inf^n) = |a|_1 * 2^(n-1). Requires n >= 2.
double cube_projection(const Direction& a);

/// E|X + Y| against E max(|X|, |Y|) for the block sums
/// X = sum_{j < split} a_j X_j and Y the rest; the two moments agree for
/// independent symmetric summands. Returns both coupled MC estimates.
std::pair<MCEstimate, MCEstimate> max_representation_check(const Direction& a,
                                                           std::size_t split, Exponent q,
                                                           std::uint64_t samples,
                                                           std::uint64_t seed);

}  // namespace slice

#endif
