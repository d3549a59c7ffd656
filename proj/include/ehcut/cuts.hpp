#ifndef EHCUT_CUTS_HPP
#define EHCUT_CUTS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ehcut/topology.hpp"

namespace ehcut {

enum class CutKind : std::uint8_t { VertexCut, EdgeCut };
enum class Provenance : std::uint8_t { Canonical, Solver, User };

const char* to_string(CutKind k);
const char* to_string(Provenance p);

// A vertex or edge set claimed to disconnect the graph while keeping the
// residual minimum degree at least h. Members are kept sorted; equality is
// set equality.
struct CutCertificate {
    CutKind kind = CutKind::VertexCut;
    int h = 0;
    std::string instance;            // e.g. "eh(2,3)"
    std::vector<VertexId> vertices;  // sorted, VertexCut only
    std::vector<Edge> edges;         // sorted, EdgeCut only
    Provenance provenance = Provenance::Canonical;

    std::size_t size() const {
        return kind == CutKind::VertexCut ? vertices.size() : edges.size();
    }
    bool operator==(const CutCertificate&) const = default;
};

// Stable-order text record for golden files and the CLI.
std::string to_record(const CutCertificate& cert, int label_bits);

// 2^h(s+1-h), the certificate size for EH(s,t) with 0 <= h <= s <= t.
std::uint64_t eh_cut_size_formula(int s, int h);

// The 2^h vertices whose rightmost s+t+1-h bits are zero. Their induced
// subgraph is a copy of Q_h. Requires 0 <= h <= s <= t.
std::vector<VertexId> canonical_core(TopologyParams params, int h);

// Neighbor set S of the core in EH(s,t) minus the core; |S| = 2^h(s+1-h).
CutCertificate canonical_vertex_cut(TopologyParams params, int h);

// Edges F between the core and S; |F| = 2^h(s+1-h).
CutCertificate canonical_edge_cut(TopologyParams params, int h);

// Hypercube analogues (core = an h-dimensional subcube of Q_n). The vertex
// form needs h <= n-2 so something is left outside X and S; the edge form
// needs h <= n-1.
CutCertificate canonical_qn_vertex_cut(int n, int h);
CutCertificate canonical_qn_edge_cut(int n, int h);

// True iff g - S is disconnected and every remaining vertex keeps degree >= h.
// Removing everything (or all but one vertex) is not a cut.
bool is_h_vertex_cut(const Topology& g, std::span<const VertexId> removed, int h);

// Same for edge removal. Throws NotAnEdge if a member is not an edge of g.
bool is_h_edge_cut(const Topology& g, std::span<const Edge> removed, int h);

bool certificate_is_valid(const Topology& g, const CutCertificate& cert);

// Components and minimum degree of the graph after a removal.
// component_sizes is sorted descending, ties by smallest contained id;
// min_degree is -1 when nothing remains.
struct ResidualProfile {
    std::uint32_t component_count = 0;
    std::vector<std::uint32_t> component_sizes;
    int min_degree = -1;
};

ResidualProfile residual_profile_vertices(const Topology& g, std::span<const VertexId> removed);
ResidualProfile residual_profile_edges(const Topology& g, std::span<const Edge> removed);

} // namespace ehcut

#endif
