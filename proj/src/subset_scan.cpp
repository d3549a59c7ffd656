#include "subset_scan.hpp"

#include <atomic>
#include <chrono>

#include "ehcut/cuts.hpp"
#include "combinations.hpp"
#include "mask_graph.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ehcut::detail {

namespace {

using Clock = std::chrono::steady_clock;

void atomic_min(std::atomic<std::uint64_t>& target, std::uint64_t value) {
    std::uint64_t cur = target.load();
    while (value < cur && !target.compare_exchange_weak(cur, value)) {
    }
}

int resolve_workers(int workers) {
#ifdef _OPENMP
    return workers > 0 ? workers : omp_get_max_threads();
#else
    (void)workers;
    return 1;
#endif
}

// Scans all k-subsets at one size; returns the rank of the first passing
// subset, if any. Chunks are claimed dynamically but the reduction keeps the
// smallest rank, so the outcome does not depend on the schedule.
template <typename Test>
std::optional<std::uint64_t> scan_one_size(int n, int k, std::uint64_t total, int workers,
                                           Clock::time_point deadline, bool& timed_out,
                                           const Test& test) {
    constexpr std::uint64_t kChunk = 8192;
    const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
    std::atomic<std::uint64_t> first_hit{~std::uint64_t{0}};
    std::atomic<bool> expired{false};

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
#endif
    for (long long c = 0; c < static_cast<long long>(chunks); ++c) {
        if (expired.load(std::memory_order_relaxed)) continue;
        const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
        if (begin > first_hit.load(std::memory_order_relaxed)) continue;
        const std::uint64_t end = std::min(begin + kChunk, total);
        std::vector<int> combo;
        unrank_combination(begin, n, k, combo);
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            if (idx > first_hit.load(std::memory_order_relaxed)) break;
            if ((idx & 1023u) == 0 && Clock::now() > deadline) {
                expired.store(true);
                break;
            }
            if (test(combo)) {
                atomic_min(first_hit, idx);
                break;
            }
            if (idx + 1 < end) next_combination(combo, n);
        }
    }
    (void)workers;
    timed_out = expired.load();
    const std::uint64_t hit = first_hit.load();
    if (hit != ~std::uint64_t{0}) return hit;
    return std::nullopt;
}

} // namespace

ScanOutcome scan_vertex_subsets(const Topology& g, int h, int max_size,
                                std::uint64_t max_candidates, double time_limit_seconds,
                                int workers) {
    const int n = static_cast<int>(g.vertex_count());
    const int useful_max = std::max(n - 2, 0); // removing more leaves <= 1 vertex
    const int limit = std::min(max_size, useful_max);
    const auto deadline =
        Clock::now() + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(time_limit_seconds));
    const int nworkers = resolve_workers(workers);

    const bool use_masks = g.vertex_count() <= 64;
    std::optional<MaskGraph> mg;
    if (use_masks) mg.emplace(g);

    std::uint64_t spent = 0;
    for (int k = 0; k <= limit; ++k) {
        const std::uint64_t total =
            binomial_capped(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k),
                            max_candidates + 1);
        if (spent + total > max_candidates) return {};
        bool timed_out = false;
        std::optional<std::uint64_t> hit;
        if (use_masks) {
            hit = scan_one_size(n, k, total, nworkers, deadline, timed_out,
                                [&](const std::vector<int>& combo) {
                                    std::uint64_t mask = 0;
                                    for (int v : combo) mask |= std::uint64_t{1} << v;
                                    return mask_vertex_cut_check(*mg, mask, h);
                                });
        } else {
            hit = scan_one_size(n, k, total, nworkers, deadline, timed_out,
                                [&](const std::vector<int>& combo) {
                                    std::vector<VertexId> ids(combo.begin(), combo.end());
                                    return is_h_vertex_cut(g, ids, h);
                                });
        }
        if (hit) {
            ScanOutcome out;
            out.complete = true;
            out.found_size = static_cast<std::uint32_t>(k);
            std::vector<int> combo;
            unrank_combination(*hit, n, k, combo);
            out.witness.assign(combo.begin(), combo.end());
            return out;
        }
        if (timed_out) return {};
        spent += total;
    }
    ScanOutcome out;
    out.complete = true;
    return out;
}

} // namespace ehcut::detail
