#ifndef SLICE_RNG_HPP
#define SLICE_RNG_HPP

#include <array>
#include <cstdint>

namespace slice {

/// Counter-based generator (Philox 4x32-10). The j-th draw of the
/// substream for sample index i is a pure function of (seed, i, j), so
/// results never depend on how samples are partitioned across workers.
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t sample_index);

    /// Uniform on the open interval (0, 1).
    double uniform01();
    /// Uniform on (-1, 1).
    double uniform_sym() { return 2.0 * uniform01() - 1.0; }
    /// Standard normal (Marsaglia polar method).
    double normal();
    /// Gamma variate, any shape > 0, unit scale. Returns log(G).
    ///
    /// Marsaglia-Tsang for shape >= 1. For shape < 1 the required
    /// approach is the boosting trick: draw G' ~ Gamma(shape+1) and
    /// apply the power correction G = G' * U^(1/shape), which here is
    /// log G = log G' + log(U)/shape. Working in log space keeps tiny
    /// variates (shape near 0, or later roots G^(1/p) with huge p)
    /// out of underflow.
    double log_gamma_variate(double shape);
    double gamma_variate(double shape);
    /// Uniform point on the unit sphere in R^3 (Marsaglia disk method).
    std::array<double, 3> sphere3();

  private:
    std::array<std::uint32_t, 4> block(std::uint64_t draw_index) const;
    std::uint64_t next_bits();

    std::uint32_t key_[2];
    std::uint64_t index_;
    std::uint64_t draw_ = 0;
    std::uint64_t buffered_ = 0;
    bool have_buffer_ = false;
};

struct RngStream {
    std::uint64_t seed = 0;
    CounterRng at(std::uint64_t sample_index) const { return CounterRng(seed, sample_index); }
};

}  // namespace slice

#endif
