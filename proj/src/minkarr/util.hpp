#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace minkarr {

inline int effective_workers(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(begin, end) over contiguous chunks of [0, n). Chunk boundaries are a
// pure function of (n, workers), so callers that collect per-chunk results and
// merge them in chunk order stay deterministic regardless of scheduling.
inline void parallel_chunks(std::size_t n, int workers,
                            const std::function<void(std::size_t, std::size_t, int)>& fn) {
    const int w = effective_workers(workers);
    if (w <= 1 || n < 2048) {
        fn(0, n, 0);
        return;
    }
    const std::size_t chunk = (n + static_cast<std::size_t>(w) - 1) / static_cast<std::size_t>(w);
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(w));
    for (int t = 0; t < w; ++t) {
        const std::size_t lo = static_cast<std::size_t>(t) * chunk;
        if (lo >= n) break;
        const std::size_t hi = std::min(n, lo + chunk);
        threads.emplace_back([&fn, lo, hi, t] { fn(lo, hi, t); });
    }
    for (auto& th : threads) th.join();
}

// splitmix64; stable across platforms unlike the std distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

private:
    std::uint64_t state_;
};

// Pairwise (binary-tree) summation in index order; bit-stable independent of
// accumulation chunking.
inline double pairwise_sum(const std::vector<double>& xs, std::size_t lo, std::size_t hi) {
    const std::size_t n = hi - lo;
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += xs[i];
        return s;
    }
    const std::size_t mid = lo + n / 2;
    return pairwise_sum(xs, lo, mid) + pairwise_sum(xs, mid, hi);
}

inline double pairwise_sum(const std::vector<double>& xs) { return pairwise_sum(xs, 0, xs.size()); }

}  // namespace minkarr
