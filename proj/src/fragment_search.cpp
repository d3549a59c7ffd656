#include "fragment_search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>

#include "mask_graph.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ehcut::detail {

namespace {

using Clock = std::chrono::steady_clock;

void atomic_min_u32(std::atomic<std::uint32_t>& target, std::uint32_t value) {
    std::uint32_t cur = target.load();
    while (value < cur && !target.compare_exchange_weak(cur, value)) {
    }
}

struct RootResult {
    std::uint32_t size = ~std::uint32_t{0};
    std::vector<Edge> cut;
};

bool cut_less(std::uint32_t a_size, const std::vector<Edge>& a, std::uint32_t b_size,
              const std::vector<Edge>& b) {
    if (a_size != b_size) return a_size < b_size;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Shared bookkeeping for both representations.
struct SearchControl {
    std::atomic<std::uint32_t> bound{~std::uint32_t{0}}; // prune strictly above
    std::atomic<std::uint64_t> visited{0};
    std::atomic<bool> stop{false};
    std::uint64_t max_nodes = 0;
    Clock::time_point deadline;

    // Returns false when the search must abort. Node counting is exact, so a
    // tree within the budget always completes and one beyond it always
    // truncates, independent of scheduling.
    bool account() {
        if (stop.load(std::memory_order_relaxed)) return false;
        const std::uint64_t seen = visited.fetch_add(1, std::memory_order_relaxed);
        if (seen >= max_nodes) {
            stop.store(true);
            return false;
        }
        if ((seen & 0xFFFu) == 0 && Clock::now() > deadline) {
            stop.store(true);
            return false;
        }
        return true;
    }
};

// ---- bitmask representation (n <= 64) ----

class MaskSearch {
public:
    MaskSearch(const MaskGraph& g, int h, SearchControl& ctl)
        : g_(g), h_(h), half_cap_(g.n / 2), ctl_(ctl) {}

    RootResult run_root(int root) {
        result_ = {};
        const std::uint64_t self = std::uint64_t{1} << root;
        const std::uint64_t forbidden = self - 1; // smaller roots own those sets
        if (std::popcount(g_.rows[root] & ~forbidden) >= h_)
            explore(self, forbidden, g_.rows[root] & ~forbidden,
                    std::popcount(g_.rows[root] & forbidden));
        return std::move(result_);
    }

private:
    void evaluate(std::uint64_t x) {
        for (std::uint64_t m = x; m; m &= m - 1)
            if (std::popcount(g_.rows[std::countr_zero(m)] & x) < h_) return;
        const std::uint64_t rest = g_.all & ~x;
        for (std::uint64_t m = rest; m; m &= m - 1)
            if (std::popcount(g_.rows[std::countr_zero(m)] & rest) < h_) return;
        std::uint32_t boundary = 0;
        for (std::uint64_t m = x; m; m &= m - 1)
            boundary += static_cast<std::uint32_t>(
                std::popcount(g_.rows[std::countr_zero(m)] & rest));
        if (boundary > ctl_.bound.load(std::memory_order_relaxed)) return;
        std::vector<Edge> cut;
        cut.reserve(boundary);
        for (std::uint64_t m = x; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            for (std::uint64_t e = g_.rows[v] & rest; e; e &= e - 1)
                cut.push_back(make_edge(static_cast<VertexId>(v),
                                        static_cast<VertexId>(std::countr_zero(e))));
        }
        std::sort(cut.begin(), cut.end());
        if (cut_less(boundary, cut, result_.size, result_.cut)) {
            result_.size = boundary;
            result_.cut = std::move(cut);
            atomic_min_u32(ctl_.bound, boundary);
        }
    }

    void explore(std::uint64_t x, std::uint64_t forbidden, std::uint64_t ext,
                 std::uint32_t perm) {
        if (!ctl_.account()) return;
        evaluate(x);
        if (std::popcount(x) >= half_cap_ || ext == 0) return;

        const int u = std::countr_zero(ext);
        const std::uint64_t ubit = std::uint64_t{1} << u;

        // include u
        const std::uint32_t perm_in =
            perm + static_cast<std::uint32_t>(std::popcount(g_.rows[u] & forbidden));
        if (perm_in <= ctl_.bound.load(std::memory_order_relaxed) &&
            std::popcount(g_.rows[u] & ~forbidden) >= h_) {
            const std::uint64_t nx = x | ubit;
            explore(nx, forbidden, ((ext | g_.rows[u]) & ~forbidden & ~nx), perm_in);
        }

        // exclude u
        const std::uint64_t nforbidden = forbidden | ubit;
        const std::uint32_t perm_out =
            perm + static_cast<std::uint32_t>(std::popcount(g_.rows[u] & x));
        if (perm_out > ctl_.bound.load(std::memory_order_relaxed)) return;
        for (std::uint64_t m = g_.rows[u] & x; m; m &= m - 1)
            if (std::popcount(g_.rows[std::countr_zero(m)] & ~nforbidden) < h_) return;
        explore(x, nforbidden, ext & ~ubit, perm_out);
    }

    const MaskGraph& g_;
    int h_;
    int half_cap_;
    SearchControl& ctl_;
    RootResult result_;
};

// ---- generic representation (any n) ----

class GenericSearch {
public:
    GenericSearch(const Topology& g, int h, SearchControl& ctl)
        : g_(g), h_(h), n_(static_cast<int>(g.vertex_count())), half_cap_(n_ / 2), ctl_(ctl),
          in_x_(g.vertex_count(), 0), forbidden_(g.vertex_count(), 0),
          indeg_(g.vertex_count(), 0), potential_(g.vertex_count(), 0) {}

    RootResult run_root(int root) {
        result_ = {};
        std::fill(in_x_.begin(), in_x_.end(), 0);
        std::fill(forbidden_.begin(), forbidden_.end(), 0);
        std::fill(indeg_.begin(), indeg_.end(), 0);
        for (VertexId v = 0; v < g_.vertex_count(); ++v)
            potential_[v] = g_.degree(v);
        members_.clear();
        boundary_ = 0;
        outside_short_ = 0; // complement vertices with fewer than h outside neighbors
        for (VertexId v = 0; v < g_.vertex_count(); ++v)
            if (g_.degree(v) < h_) ++outside_short_;

        std::uint32_t perm = 0;
        for (VertexId v = 0; v < static_cast<VertexId>(root); ++v) {
            forbid(v);
            if (g_.has_edge(v, static_cast<VertexId>(root))) ++perm;
        }
        if (potential_[static_cast<VertexId>(root)] >= h_) {
            include(static_cast<VertexId>(root));
            std::vector<VertexId> ext;
            for (VertexId w : g_.neighbors(static_cast<VertexId>(root)))
                if (!forbidden_[w]) ext.push_back(w);
            explore(ext, perm);
        }
        return std::move(result_);
    }

private:
    void include(VertexId u) {
        in_x_[u] = 1;
        members_.push_back(u);
        boundary_ += static_cast<std::uint32_t>(g_.degree(u)) - 2 * indeg_[u];
        if (g_.degree(u) - static_cast<int>(indeg_[u]) < h_) --outside_short_;
        for (VertexId w : g_.neighbors(u)) {
            if (!in_x_[w] && g_.degree(w) - static_cast<int>(indeg_[w]) == h_) ++outside_short_;
            ++indeg_[w];
        }
    }

    void uninclude(VertexId u) {
        for (VertexId w : g_.neighbors(u)) {
            --indeg_[w];
            if (!in_x_[w] && g_.degree(w) - static_cast<int>(indeg_[w]) == h_) --outside_short_;
        }
        if (g_.degree(u) - static_cast<int>(indeg_[u]) < h_) ++outside_short_;
        boundary_ -= static_cast<std::uint32_t>(g_.degree(u)) - 2 * indeg_[u];
        members_.pop_back();
        in_x_[u] = 0;
    }

    void forbid(VertexId u) {
        forbidden_[u] = 1;
        for (VertexId w : g_.neighbors(u)) --potential_[w];
    }

    void unforbid(VertexId u) {
        forbidden_[u] = 0;
        for (VertexId w : g_.neighbors(u)) ++potential_[w];
    }

    void evaluate() {
        if (outside_short_ != 0) return;
        for (VertexId v : members_)
            if (static_cast<int>(indeg_[v]) < h_) return;
        if (boundary_ > ctl_.bound.load(std::memory_order_relaxed)) return;
        std::vector<Edge> cut;
        cut.reserve(boundary_);
        for (VertexId v : members_)
            for (VertexId w : g_.neighbors(v))
                if (!in_x_[w]) cut.push_back(make_edge(v, w));
        std::sort(cut.begin(), cut.end());
        if (cut_less(boundary_, cut, result_.size, result_.cut)) {
            result_.size = boundary_;
            result_.cut = std::move(cut);
            atomic_min_u32(ctl_.bound, boundary_);
        }
    }

    void explore(const std::vector<VertexId>& ext, std::uint32_t perm) {
        if (!ctl_.account()) return;
        evaluate();
        if (static_cast<int>(members_.size()) >= half_cap_ || ext.empty()) return;

        const VertexId u = *std::min_element(ext.begin(), ext.end());

        // include u
        std::uint32_t perm_in = perm;
        for (VertexId w : g_.neighbors(u))
            if (forbidden_[w]) ++perm_in;
        if (perm_in <= ctl_.bound.load(std::memory_order_relaxed) &&
            potential_[u] >= h_) {
            include(u);
            std::vector<VertexId> next_ext;
            next_ext.reserve(ext.size() + g_.degree(u));
            for (VertexId w : ext)
                if (w != u) next_ext.push_back(w);
            for (VertexId w : g_.neighbors(u))
                if (!in_x_[w] && !forbidden_[w] &&
                    std::find(next_ext.begin(), next_ext.end(), w) == next_ext.end())
                    next_ext.push_back(w);
            explore(next_ext, perm_in);
            uninclude(u);
        }

        // exclude u
        std::uint32_t perm_out = perm;
        for (VertexId w : g_.neighbors(u))
            if (in_x_[w]) ++perm_out;
        if (perm_out > ctl_.bound.load(std::memory_order_relaxed)) return;
        forbid(u);
        bool feasible = true;
        for (VertexId w : g_.neighbors(u))
            if (in_x_[w] && potential_[w] < h_) {
                feasible = false;
                break;
            }
        if (feasible) {
            std::vector<VertexId> next_ext;
            next_ext.reserve(ext.size());
            for (VertexId w : ext)
                if (w != u) next_ext.push_back(w);
            explore(next_ext, perm_out);
        }
        unforbid(u);
    }

    const Topology& g_;
    int h_;
    int n_;
    int half_cap_;
    SearchControl& ctl_;
    RootResult result_;
    std::vector<char> in_x_;
    std::vector<char> forbidden_;
    std::vector<std::uint32_t> indeg_;
    std::vector<int> potential_;
    std::vector<VertexId> members_;
    std::uint32_t boundary_ = 0;
    int outside_short_ = 0;
};

} // namespace

FragmentOutcome fragment_min_edge_cut(const Topology& g, int h,
                                      std::optional<std::uint32_t> seed_size,
                                      const std::vector<Edge>* seed_cut,
                                      std::uint64_t max_nodes, double time_limit_seconds,
                                      int workers, bool force_generic) {
    const int n = static_cast<int>(g.vertex_count());
    SearchControl ctl;
    ctl.max_nodes = max_nodes;
    ctl.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(time_limit_seconds));
    if (seed_size) ctl.bound.store(*seed_size);

#ifdef _OPENMP
    const int nworkers = workers > 0 ? workers : omp_get_max_threads();
#else
    const int nworkers = 1;
    (void)workers;
#endif

    std::vector<RootResult> per_root(g.vertex_count());
    const bool use_masks = !force_generic && g.vertex_count() <= 64;
    std::optional<MaskGraph> mg;
    if (use_masks) mg.emplace(g);

#ifdef _OPENMP
#pragma omp parallel num_threads(nworkers)
#endif
    {
        if (use_masks) {
            MaskSearch search(*mg, h, ctl);
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1)
#endif
            for (int root = 0; root < n; ++root) per_root[root] = search.run_root(root);
        } else {
            GenericSearch search(g, h, ctl);
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1)
#endif
            for (int root = 0; root < n; ++root) per_root[root] = search.run_root(root);
        }
    }

    FragmentOutcome out;
    if (ctl.stop.load()) return out; // truncated: partial bests are schedule-dependent
    out.complete = true;
    std::uint32_t best = seed_size ? *seed_size : ~std::uint32_t{0};
    const std::vector<Edge>* best_cut = seed_cut;
    for (const RootResult& r : per_root) {
        if (r.size == ~std::uint32_t{0}) continue;
        if (!best_cut || cut_less(r.size, r.cut, best, *best_cut)) {
            best = r.size;
            best_cut = &r.cut;
        }
    }
    if (best_cut) {
        out.best_size = best;
        out.best_cut = *best_cut;
    }
    return out;
}

} // namespace ehcut::detail
