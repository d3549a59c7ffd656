#ifndef EHCUT_SRC_FRAGMENT_SEARCH_HPP
#define EHCUT_SRC_FRAGMENT_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ehcut/topology.hpp"

namespace ehcut::detail {

struct FragmentOutcome {
    // False when the node budget or the deadline stopped the search; callers
    // must then fall back to the seed bound, because partial improvements are
    // schedule-dependent.
    bool complete = false;
    std::optional<std::uint32_t> best_size;
    std::vector<Edge> best_cut;
};

// Minimizes |boundary(X)| over connected vertex sets X (|X| <= n/2) whose two
// sides both keep minimum degree >= h. Every minimum h-edge-cut is such a
// boundary, so the optimum equals the minimum h-edge-cut size. Enumeration is
// rooted at each set's smallest vertex; branches are cut once the edges
// already committed to the boundary exceed the best bound, which never prunes
// a minimum fragment, so results are worker-count independent.
FragmentOutcome fragment_min_edge_cut(const Topology& g, int h,
                                      std::optional<std::uint32_t> seed_size,
                                      const std::vector<Edge>* seed_cut,
                                      std::uint64_t max_nodes, double time_limit_seconds,
                                      int workers, bool force_generic = false);

} // namespace ehcut::detail

#endif
