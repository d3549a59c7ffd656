#ifndef EHCUT_SRC_SUBSET_SCAN_HPP
#define EHCUT_SRC_SUBSET_SCAN_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ehcut/topology.hpp"

namespace ehcut::detail {

struct ScanOutcome {
    // True when every size in [0, max_size] was either fully enumerated or
    // provably useless. A found_size is exact regardless: all smaller sizes
    // were exhausted before it.
    bool complete = false;
    std::optional<std::uint32_t> found_size;
    std::vector<VertexId> witness; // lexicographically first passing subset
};

// Enumerates vertex subsets ascending by size, lexicographic within a size,
// and stops at the first size containing an h-vertex-cut. Sizes are
// all-or-nothing against max_candidates, so truncation does not depend on
// scheduling. Results are worker-count independent.
ScanOutcome scan_vertex_subsets(const Topology& g, int h, int max_size,
                                std::uint64_t max_candidates, double time_limit_seconds,
                                int workers);

} // namespace ehcut::detail

#endif
