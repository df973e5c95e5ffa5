#include "slice/domain.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace slice {

Exponent Exponent::finite(double v) {
    if (!std::isfinite(v) || v < 1.0) {
        throw InvalidInputError("exponent must be a finite real >= 1");
    }
    return Exponent(v, false);
}

Exponent Exponent::infinity() { return Exponent(0.0, true); }

Exponent Exponent::parse(std::string_view text) {
    if (text == "inf" || text == "Inf" || text == "INF") {
        return infinity();
    }
    double v = 0.0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw InvalidInputError("cannot parse exponent '" + std::string(text) + "'");
    }
    return finite(v);
}

double Exponent::value() const {
    if (infinite_) {
        throw InvalidInputError("exponent is infinite");
    }
    return value_;
}

Exponent Exponent::dual() const {
    if (infinite_) return finite(1.0);
    if (value_ == 1.0) return infinity();
    return finite(value_ / (value_ - 1.0));
}

std::string Exponent::str() const {
    if (infinite_) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value_);
    return buf;
}

namespace {
constexpr double kSupportCutoff = 1e-15;
}

Direction::Direction(std::vector<double> raw) : coords_(std::move(raw)) {
    if (coords_.empty()) {
        throw InvalidInputError("direction needs at least one coordinate");
    }
    for (double& c : coords_) {
        if (!std::isfinite(c)) {
            throw InvalidInputError("direction coordinates must be finite");
        }
        c = std::fabs(c);
    }
    std::sort(coords_.begin(), coords_.end(), std::greater<double>());
    // Norm accumulated in canonical order, so any signed permutation of
    // the same multiset rounds to the same result.
    double norm2 = 0.0;
    for (double c : coords_) norm2 += c * c;
    if (norm2 == 0.0) {
        throw InvalidInputError("direction must be a nonzero vector");
    }
    // Rescale unless already unit within 1e-12; inputs far from unit
    // length are accepted and normalized, not rejected.
    const double norm = std::sqrt(norm2);
    if (std::fabs(norm - 1.0) > 1e-12) {
        for (double& c : coords_) c /= norm;
    }
}

std::size_t Direction::support_size() const {
    std::size_t k = 0;
    while (k < coords_.size() && coords_[k] > kSupportCutoff) ++k;
    return k;
}

double Direction::norm(const Exponent& p) const {
    if (p.is_infinite()) return coords_.front();
    const double pv = p.value();
    if (pv == 1.0) {
        double s = 0.0;
        for (double c : coords_) s += c;
        return s;
    }
    if (pv == 2.0) {
        double s = 0.0;
        for (double c : coords_) s += c * c;
        return std::sqrt(s);
    }
    // coords_[0] is the largest coordinate; factoring it out keeps
    // pow() away from underflow for very large p.
    const double a1 = coords_.front();
    if (a1 == 0.0) return 0.0;
    double s = 0.0;
    for (double c : coords_) s += std::pow(c / a1, pv);
    return a1 * std::pow(s, 1.0 / pv);
}

Direction canonicalize(std::vector<double> raw) { return Direction(std::move(raw)); }

double deficit(const Direction& a) {
    const double a1 = a[0];
    const double a2 = a.dim() >= 2 ? a[1] : 0.0;
    double d = 2.0 - std::sqrt(2.0) * (a1 + a2);
    if (d < 0.0) d = 0.0;
    if (d > 2.0) d = 2.0;
    return d;
}

std::string lemma_id_name(LemmaId id) {
    switch (id) {
        case LemmaId::PMeansDeficit: return "p_means_deficit";
        case LemmaId::NearPairGap: return "near_pair_gap";
        case LemmaId::RadialL2Bound: return "radial_l2_bound";
        case LemmaId::SignCouplingL2: return "sign_coupling_l2";
        case LemmaId::EquicontinuitySection: return "equicontinuity_section";
        case LemmaId::EquicontinuityProjection: return "equicontinuity_projection";
        case LemmaId::SectionCoreBound: return "section_core_bound";
        case LemmaId::ProjectionCoreBound: return "projection_core_bound";
        case LemmaId::CpSandwich: return "cp_sandwich";
        case LemmaId::CqSandwich: return "cq_sandwich";
    }
    return "unknown";
}

std::string verdict_status_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Pass: return "pass";
        case VerdictStatus::Fail: return "fail";
        case VerdictStatus::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

}  // namespace slice
