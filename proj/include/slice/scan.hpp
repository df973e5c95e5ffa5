#ifndef SLICE_SCAN_HPP
#define SLICE_SCAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "slice/domain.hpp"

namespace slice {

/// Large-n limit of the diagonal section ratio, from the central limit
/// of the sphere lift: Gamma(1+1/p) sqrt(2/pi) sqrt(3 Gamma(1+1/p)/Gamma(1+3/p)).
/// Equals 1 at p = 2 and sqrt(6/pi) at p = inf.
double diagonal_limit_section(Exponent p);

/// Large-n limit of the bare diagonal projection moment:
/// sqrt(2 Gamma(2-1/q) / (pi Gamma(1/q))). Comparable against the bare
/// constant szarek_value(q); crosses it exactly at q = 4/3.
double diagonal_limit_projection(Exponent q);

struct ScanRow {
    double exponent = 0.0;
    double diagonal_value = 0.0;
    double ball_value = 0.0;
    double difference = 0.0;                 // diagonal - ball
    std::optional<unsigned> n_used;          // nullopt = CLT limit
};

/// Section rows over grid p-values in (2, inf): diagonal (limit or
/// finite-n Monte Carlo) against 2^(1/2-1/p).
std::vector<ScanRow> scan_sections(const std::vector<double>& grid,
                                   std::optional<unsigned> n, std::uint64_t samples,
                                   std::uint64_t seed);

/// Projection rows over grid q-values in (1, 2), ratio level on both
/// columns: Gamma(1/q) * diagonal limit against 2^(1/2-1/q).
std::vector<ScanRow> scan_projections(const std::vector<double>& grid,
                                      std::optional<unsigned> n, std::uint64_t samples,
                                      std::uint64_t seed);

/// Bisection bracket for the sign change of the section limit
/// difference; returns (lo, hi) with positive difference at lo and
/// negative at hi, width below 0.01.
std::pair<double, double> bracket_section_crossing();

/// CSV with the fixed header exponent,diagonal_value,ball_value,
/// difference,n_used; floats carry 12 significant digits, rows end in LF.
std::string scan_csv(const std::vector<ScanRow>& rows);

}  // namespace slice

#endif
