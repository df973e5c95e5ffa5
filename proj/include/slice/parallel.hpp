#ifndef SLICE_PARALLEL_HPP
#define SLICE_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace slice {

/// Worker cap: SLICE_THREADS when set (clamped to [1, 256]), otherwise
/// the hardware concurrency.
unsigned worker_count();

/// Deterministic indexed reduction. Samples are grouped into blocks of a
/// fixed size that does not depend on the worker count; each block is
/// accumulated sequentially by whichever worker picks it up, and block
/// results are combined in block order. The outcome is therefore
/// bit-identical for any number of workers.
///
/// T needs a default constructor and operator+=.
template <class T, class F>
T indexed_sum(std::uint64_t n, F&& per_sample, unsigned workers = 0) {
    constexpr std::uint64_t kBlock = 1 << 16;
    const std::uint64_t n_blocks = n == 0 ? 0 : (n - 1) / kBlock + 1;
    if (workers == 0) workers = worker_count();

    const auto run_block = [&](std::uint64_t b) {
        const std::uint64_t lo = b * kBlock;
        const std::uint64_t hi = std::min(n, lo + kBlock);
        T acc{};
        for (std::uint64_t i = lo; i < hi; ++i) acc += per_sample(i);
        return acc;
    };

    // The block structure is identical in every mode; only who computes
    // each block varies, so the combined result is always bit-identical.
    if (n_blocks <= 1 || workers <= 1) {
        T total{};
        for (std::uint64_t b = 0; b < n_blocks; ++b) total += run_block(b);
        return total;
    }

    std::vector<T> partial(n_blocks);
    std::atomic<std::uint64_t> next{0};
    auto run = [&]() {
        for (;;) {
            const std::uint64_t b = next.fetch_add(1, std::memory_order_relaxed);
            if (b >= n_blocks) return;
            partial[b] = run_block(b);
        }
    };
    std::vector<std::thread> pool;
    const unsigned spawn = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, n_blocks));
    pool.reserve(spawn);
    for (unsigned w = 0; w < spawn; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();

    T total{};
    for (const T& part : partial) total += part;
    return total;
}

/// Running sums for a scalar Monte Carlo estimator, enough for the mean,
/// standard error and a kurtosis-based heavy-tail diagnostic.
struct ScalarMoments {
    double s1 = 0.0;
    double s2 = 0.0;
    double s4 = 0.0;
    ScalarMoments& operator+=(const ScalarMoments& o) {
        s1 += o.s1;
        s2 += o.s2;
        s4 += o.s4;
        return *this;
    }
    ScalarMoments& operator+=(double v) {
        s1 += v;
        const double v2 = v * v;
        s2 += v2;
        s4 += v2 * v2;
        return *this;
    }
};

}  // namespace slice

#endif
