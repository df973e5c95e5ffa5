// Internal helpers shared by the Monte Carlo estimators.
#ifndef SLICE_MC_DETAIL_HPP
#define SLICE_MC_DETAIL_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "slice/domain.hpp"

namespace slice::detail {

struct McMoments {
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;
    double s4 = 0.0;
    double vmax = 0.0;
    McMoments& operator+=(const McMoments& o) {
        s1 += o.s1;
        s2 += o.s2;
        s3 += o.s3;
        s4 += o.s4;
        vmax = std::max(vmax, o.vmax);
        return *this;
    }
    McMoments& operator+=(double v) {
        const double v2 = v * v;
        s1 += v;
        s2 += v2;
        s3 += v2 * v;
        s4 += v2 * v2;
        const double av = std::fabs(v);
        if (av > vmax) vmax = av;
        return *this;
    }
};

inline MCEstimate finalize(const McMoments& m, std::uint64_t n, std::uint64_t seed,
                           bool tail_diagnostic) {
    MCEstimate est;
    est.samples = n;
    est.seed = seed;
    est.mean = m.s1 / static_cast<double>(n);
    if (n > 1) {
        const double nn = static_cast<double>(n);
        double centered2 = m.s2 - nn * est.mean * est.mean;
        if (centered2 < 0.0) centered2 = 0.0;
        est.std_error = std::sqrt(centered2 / (nn - 1.0) / nn);
        if (tail_diagnostic && centered2 > 0.0 && n >= 1000) {
            const double mu = est.mean;
            const double c4 = m.s4 - 4.0 * mu * m.s3 + 6.0 * mu * mu * m.s2 -
                              3.0 * nn * mu * mu * mu * mu;
            const double kurt = nn * c4 / (centered2 * centered2);
            const bool one_sample_dominates = m.vmax * m.vmax > 0.9 * centered2;
            if (!(kurt < 1e4) || one_sample_dominates) est.heavy_tail_flag = true;
        }
    }
    if (!std::isfinite(est.mean) || !std::isfinite(est.std_error)) {
        est.heavy_tail_flag = true;
    }
    return est;
}

}  // namespace slice::detail

#endif
