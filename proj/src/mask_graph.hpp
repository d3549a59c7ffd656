#ifndef EHCUT_SRC_MASK_GRAPH_HPP
#define EHCUT_SRC_MASK_GRAPH_HPP

#include <array>
#include <bit>
#include <cstdint>

#include "ehcut/topology.hpp"

// Bitmask adjacency for graphs with at most 64 vertices. The cut predicates
// and the enumeration kernels run millions of residual checks; rows-as-words
// keep one check to a handful of popcounts and OR sweeps.

namespace ehcut::detail {

struct MaskGraph {
    int n = 0;
    std::uint64_t all = 0;
    std::array<std::uint64_t, 64> rows{};

    explicit MaskGraph(const Topology& g) {
        n = static_cast<int>(g.vertex_count());
        const auto& masks = g.adjacency_masks();
        for (int v = 0; v < n; ++v) rows[static_cast<std::size_t>(v)] = masks[static_cast<std::size_t>(v)];
        all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1u);
    }
};

// Single sweep: is the subgraph on `alive` (rows pre-masked by caller where
// needed) disconnected with minimum degree >= h?
inline bool mask_cut_check(const std::uint64_t* rows, std::uint64_t alive, int h) {
    if (alive == 0) return false; // nothing left: not disconnected
    for (std::uint64_t m = alive; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        if (std::popcount(rows[v] & alive) < h) return false;
    }
    const int start = std::countr_zero(alive);
    std::uint64_t comp = std::uint64_t{1} << start;
    std::uint64_t frontier = comp;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1)
            next |= rows[std::countr_zero(m)];
        next &= alive & ~comp;
        comp |= next;
        frontier = next;
    }
    return (alive & ~comp) != 0;
}

inline bool mask_vertex_cut_check(const MaskGraph& g, std::uint64_t removed, int h) {
    return mask_cut_check(g.rows.data(), g.all & ~removed, h);
}

// Applies the edge removals in place, checks, then restores.
inline bool mask_edge_cut_check(MaskGraph& g, const Edge* removed, int count, int h) {
    for (int i = 0; i < count; ++i) {
        g.rows[removed[i].u] &= ~(std::uint64_t{1} << removed[i].v);
        g.rows[removed[i].v] &= ~(std::uint64_t{1} << removed[i].u);
    }
    const bool ok = mask_cut_check(g.rows.data(), g.all, h);
    for (int i = 0; i < count; ++i) {
        g.rows[removed[i].u] |= std::uint64_t{1} << removed[i].v;
        g.rows[removed[i].v] |= std::uint64_t{1} << removed[i].u;
    }
    return ok;
}

} // namespace ehcut::detail

#endif
