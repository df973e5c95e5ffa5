#include "slice/rng.hpp"

#include <cmath>

namespace slice {

namespace {

constexpr std::uint32_t kPhiloxW32A = 0x9E3779B9;
constexpr std::uint32_t kPhiloxW32B = 0xBB67AE85;
constexpr std::uint32_t kPhiloxM4x32A = 0xD2511F53;
constexpr std::uint32_t kPhiloxM4x32B = 0xCD9E8D57;

inline void mul_hi_lo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    lo = static_cast<std::uint32_t>(p);
    hi = static_cast<std::uint32_t>(p >> 32);
}

inline void philox_round(std::array<std::uint32_t, 4>& ctr, std::uint32_t k0, std::uint32_t k1) {
    std::uint32_t lo0, hi0, lo1, hi1;
    mul_hi_lo(kPhiloxM4x32A, ctr[0], lo0, hi0);
    mul_hi_lo(kPhiloxM4x32B, ctr[2], lo1, hi1);
    ctr = {hi1 ^ ctr[1] ^ k0, lo1, hi0 ^ ctr[3] ^ k1, lo0};
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t sample_index) : index_(sample_index) {
    const std::uint64_t mixed = splitmix64(seed);
    key_[0] = static_cast<std::uint32_t>(mixed);
    key_[1] = static_cast<std::uint32_t>(mixed >> 32);
}

std::array<std::uint32_t, 4> CounterRng::block(std::uint64_t draw_index) const {
    std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(draw_index),
        static_cast<std::uint32_t>(draw_index >> 32),
        static_cast<std::uint32_t>(index_),
        static_cast<std::uint32_t>(index_ >> 32),
    };
    std::uint32_t k0 = key_[0];
    std::uint32_t k1 = key_[1];
    for (int r = 0; r < 10; ++r) {
        philox_round(ctr, k0, k1);
        k0 += kPhiloxW32A;
        k1 += kPhiloxW32B;
    }
    return ctr;
}

std::uint64_t CounterRng::next_bits() {
    if (have_buffer_) {
        have_buffer_ = false;
        return buffered_;
    }
    const auto b = block(draw_++);
    buffered_ = (static_cast<std::uint64_t>(b[2]) << 32) | b[3];
    have_buffer_ = true;
    return (static_cast<std::uint64_t>(b[0]) << 32) | b[1];
}

double CounterRng::uniform01() {
    // 53 mantissa bits, shifted off exact 0 and 1.
    return (static_cast<double>(next_bits() >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::normal() {
    for (;;) {
        const double u = uniform_sym();
        const double v = uniform_sym();
        const double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) {
            return u * std::sqrt(-2.0 * std::log(s) / s);
        }
    }
}

double CounterRng::log_gamma_variate(double shape) {
    double boost = 0.0;
    if (shape < 1.0) {
        boost = std::log(uniform01()) / shape;
        shape += 1.0;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / (3.0 * std::sqrt(d));
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform01();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) {
            return std::log(d * v) + boost;
        }
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
            return std::log(d * v) + boost;
        }
    }
}

double CounterRng::gamma_variate(double shape) { return std::exp(log_gamma_variate(shape)); }

std::array<double, 3> CounterRng::sphere3() {
    for (;;) {
        const double u = uniform_sym();
        const double v = uniform_sym();
        const double s = u * u + v * v;
        if (s < 1.0) {
            const double r = 2.0 * std::sqrt(1.0 - s);
            return {u * r, v * r, 1.0 - 2.0 * s};
        }
    }
}

}  // namespace slice
