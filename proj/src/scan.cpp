#include "slice/scan.hpp"

#include <cmath>
#include <cstdio>

#include "slice/projections.hpp"
#include "slice/sections.hpp"
#include "slice/special.hpp"

namespace slice {

namespace {
constexpr double kPi = 3.14159265358979323846;

Direction diagonal_direction(unsigned n) {
    return Direction(std::vector<double>(n, 1.0));
}
}  // namespace

double diagonal_limit_section(Exponent p) {
    if (!p.is_infinite() && !(p.value() > 1.0)) {
        throw InvalidInputError("diagonal_limit_section requires p > 1");
    }
    const double inv_p = p.inverse();
    const double g1 = std::exp(log_gamma(1.0 + inv_p));
    const double g3 = std::exp(log_gamma(1.0 + 3.0 * inv_p));
    return g1 * std::sqrt(2.0 / kPi) * std::sqrt(3.0 * g1 / g3);
}

double diagonal_limit_projection(Exponent q) {
    if (q.is_infinite() || !(q.value() > 1.0) || q.value() > 2.0) {
        throw InvalidInputError("diagonal_limit_projection requires q in (1, 2]");
    }
    const double inv_q = 1.0 / q.value();
    return std::sqrt(2.0 * std::exp(log_gamma(2.0 - inv_q) - log_gamma(inv_q)) / kPi);
}

std::vector<ScanRow> scan_sections(const std::vector<double>& grid,
                                   std::optional<unsigned> n, std::uint64_t samples,
                                   std::uint64_t seed) {
    if (grid.empty()) {
        throw InvalidInputError("scan needs a nonempty grid");
    }
    std::vector<ScanRow> rows;
    rows.reserve(grid.size());
    for (double p : grid) {
        if (!(p > 2.0) || !std::isfinite(p)) {
            throw InvalidInputError("section scan grid must lie in (2, inf)");
        }
        ScanRow row;
        row.exponent = p;
        row.ball_value = ball_direction_value(Exponent::finite(p));
        if (n) {
            SectionQuery query(diagonal_direction(*n), Exponent::finite(p), samples, seed);
            row.diagonal_value = estimate_section_ratio(query).mean;
            row.n_used = *n;
        } else {
            row.diagonal_value = diagonal_limit_section(Exponent::finite(p));
        }
        row.difference = row.diagonal_value - row.ball_value;
        rows.push_back(row);
    }
    return rows;
}

std::vector<ScanRow> scan_projections(const std::vector<double>& grid,
                                      std::optional<unsigned> n, std::uint64_t samples,
                                      std::uint64_t seed) {
    if (grid.empty()) {
        throw InvalidInputError("scan needs a nonempty grid");
    }
    std::vector<ScanRow> rows;
    rows.reserve(grid.size());
    for (double q : grid) {
        if (!(q > 1.0) || !(q < 2.0)) {
            throw InvalidInputError("projection scan grid must lie in (1, 2)");
        }
        const Exponent qe = Exponent::finite(q);
        ScanRow row;
        row.exponent = q;
        row.ball_value = szarek_ratio_value(qe);
        if (n) {
            ProjectionQuery query(diagonal_direction(*n), qe, samples, seed);
            row.diagonal_value = estimate_projection_ratio(query).mean;
            row.n_used = *n;
        } else {
            row.diagonal_value = gamma_fn(1.0 / q) * diagonal_limit_projection(qe);
        }
        row.difference = row.diagonal_value - row.ball_value;
        rows.push_back(row);
    }
    return rows;
}

std::pair<double, double> bracket_section_crossing() {
    const auto diff = [](double p) {
        return diagonal_limit_section(Exponent::finite(p)) -
               ball_direction_value(Exponent::finite(p));
    };
    double lo = 3.0;
    if (!(diff(lo) > 0.0)) {
        throw AccuracyError("section crossing: expected positive difference at p = 3");
    }
    double hi = lo;
    for (double p = 4.0; p <= 200.0; p += 1.0) {
        if (diff(p) < 0.0) {
            hi = p;
            lo = p - 1.0;
            break;
        }
    }
    if (hi == 3.0) {
        throw AccuracyError("section crossing: no sign change up to p = 200");
    }
    while (hi - lo > 0.01) {
        const double mid = 0.5 * (lo + hi);
        (diff(mid) > 0.0 ? lo : hi) = mid;
    }
    return {lo, hi};
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::string out = "exponent,diagonal_value,ball_value,difference,n_used\n";
    char buf[160];
    for (const ScanRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,", r.exponent,
                      r.diagonal_value, r.ball_value, r.difference);
        out += buf;
        if (r.n_used) {
            std::snprintf(buf, sizeof buf, "%u", *r.n_used);
            out += buf;
        } else {
            out += "limit";
        }
        out += '\n';
    }
    return out;
}

}  // namespace slice
