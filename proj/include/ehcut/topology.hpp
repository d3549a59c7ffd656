#ifndef EHCUT_TOPOLOGY_HPP
#define EHCUT_TOPOLOGY_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ehcut/bits.hpp"

namespace ehcut {

// Construction refuses instances with more label bits than this (2^24 vertices).
inline constexpr int kDefaultBitGuard = 24;

enum class TopologyKind : std::uint8_t { EH, Qn, DC };

// The pair (s,t): s high ("class") bits, t middle ("cluster") bits, one last bit.
struct TopologyParams {
    int s = 0;
    int t = 0;
    auto operator<=>(const TopologyParams&) const = default;
};

// Undirected edge, normalized u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(VertexId a, VertexId b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

// Immutable undirected graph over ids [0, 2^bits). Adjacency is CSR with
// neighbor lists sorted ascending, so exports and reports are byte-stable.
// Safe to share across threads once built.
class Topology {
public:
    Topology(TopologyKind kind, TopologyParams params, int bits,
             std::vector<std::uint32_t> offsets, std::vector<VertexId> adj);

    TopologyKind kind() const { return kind_; }
    TopologyParams params() const { return params_; }

    // Label width: s+t+1 for EH/DC, n for Qn.
    int bit_length() const { return bits_; }

    std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(offsets_.size() - 1); }
    std::uint64_t edge_count() const { return adj_.size() / 2; }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    int degree(VertexId v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
    bool has_edge(VertexId u, VertexId v) const;

    // All edges, (u,v) ascending with u < v.
    std::vector<Edge> edge_list() const;

    // Neighbor bitmask rows; empty unless vertex_count() <= 64.
    const std::vector<std::uint64_t>& adjacency_masks() const { return masks_; }

    std::string label(VertexId v) const { return to_bit_string(v, bits_); }
    std::string name() const;

private:
    TopologyKind kind_;
    TopologyParams params_;
    int bits_;
    std::vector<std::uint32_t> offsets_;
    std::vector<VertexId> adj_;
    std::vector<std::uint64_t> masks_;
};

// Adjacency equality (kind/params ignored).
bool same_graph(const Topology& a, const Topology& b);

Topology build_eh(TopologyParams params, int bit_guard = kDefaultBitGuard);
Topology build_qn(int n, int bit_guard = kDefaultBitGuard);
// Dual-cube alias: the graph of EH(n,n) with ids kept as-is.
Topology build_dc(int n, int bit_guard = kDefaultBitGuard);

enum class EdgeClass : std::uint8_t { E1, E2, E3 };

// Classification of one EH edge; dim is the differing bit index (0 for E1).
struct EdgeKind {
    EdgeClass cls;
    int dim;
    auto operator<=>(const EdgeKind&) const = default;
};

const char* to_string(EdgeClass cls);

// Classifies an existing edge of an EH/DC topology. Throws NotAnEdge otherwise.
EdgeKind edge_kind(const Topology& g, VertexId u, VertexId v);

// One side of a split along a dimension, relabeled by deleting the split bit.
struct DecompositionHalf {
    Topology graph;
    // original_ids[new_id] = id in the parent graph.
    std::vector<VertexId> original_ids;
};

struct Decomposition {
    int dimension;
    DecompositionHalf half0;
    DecompositionHalf half1;
    std::vector<Edge> cross_edges; // parent ids, sorted
};

// Split an EH topology along bit r (1 <= r <= s+t). Each half is again an
// exchanged hypercube with one cluster/class bit fewer; throws
// UnsupportedDecomposition when that would drop s or t below 1.
Decomposition decompose(const Topology& g, int r);

// Vertex map EH(s,t) -> EH(t,s): swap the s-block and t-block, flip the last bit.
VertexId iso_swap_map(TopologyParams params, VertexId u);

// True iff map is an edge-preserving bijection V(g) -> V(h).
// Throws NotABijection on size mismatch or a non-bijective map.
bool verify_isomorphism(const Topology& g, const Topology& h, std::span<const VertexId> map);

} // namespace ehcut

#endif
