#ifndef CUBEKAPPA_INTERNAL_SUBSET_SWEEP_HPP
#define CUBEKAPPA_INTERNAL_SUBSET_SWEEP_HPP

#include <atomic>
#include <cstdint>
#include <limits>
#include <thread>
#include <vector>

#include "internal/wordset.hpp"

namespace cubekappa::detail {

/// C(n, s) saturated at uint64 max; used to gate planned enumeration work.
inline std::uint64_t binomial_saturated(int n, int s) {
    if (s < 0 || s > n) return 0;
    if (s > n - s) s = n - s;
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t r = 1;
    for (int i = 1; i <= s; ++i) {
        std::uint64_t factor = static_cast<std::uint64_t>(n - s + i);
        if (r > kMax / factor) return kMax;
        r = r * factor / static_cast<std::uint64_t>(i);
    }
    return r;
}

/// Runs body(b) for b in [0, block_count) across up to `workers` threads.
/// Blocks are claimed from an atomic counter; all results must be written to
/// per-block slots so merges stay schedule-independent.
template <class Body>
void run_blocks(int block_count, int workers, Body&& body) {
    if (block_count <= 0) return;
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    if (workers == 1 || block_count == 1) {
        for (int b = 0; b < block_count; ++b) body(b);
        return;
    }
    std::atomic<int> next{0};
    auto run = [&] {
        for (;;) {
            int b = next.fetch_add(1, std::memory_order_relaxed);
            if (b >= block_count) return;
            body(b);
        }
    };
    std::vector<std::thread> pool;
    int spawn = std::min(workers, block_count);
    pool.reserve(static_cast<std::size_t>(spawn));
    for (int i = 0; i < spawn; ++i) pool.emplace_back(run);
    for (auto& t : pool) t.join();
}

/// Visits every s-subset of {0..n-1} whose smallest element is `first`, in
/// lexicographic order of the ascending index sequence. The visitor receives
/// the subset as a bit mask and returns false to stop the block early.
template <int W, class Visit>
void visit_combinations_with_first(int n, int s, int first, Visit&& visit) {
    if (s <= 0 || first > n - s) return;
    std::vector<int> idx(static_cast<std::size_t>(s));
    WordSet<W> mask{};
    for (int i = 0; i < s; ++i) {
        idx[static_cast<std::size_t>(i)] = first + i;
        mask.set(first + i);
    }
    for (;;) {
        if (!visit(static_cast<const WordSet<W>&>(mask))) return;
        int i = s - 1;
        while (i >= 1 && idx[static_cast<std::size_t>(i)] == n - s + i) --i;
        if (i == 0) return;  // the first element is fixed per block
        mask.clear(idx[static_cast<std::size_t>(i)]);
        ++idx[static_cast<std::size_t>(i)];
        mask.set(idx[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < s; ++j) {
            mask.clear(idx[static_cast<std::size_t>(j)]);
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(i)] + (j - i);
            mask.set(idx[static_cast<std::size_t>(j)]);
        }
    }
}

} // namespace cubekappa::detail

#endif
