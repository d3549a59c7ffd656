#include <algorithm>

#include "ehcut/errors.hpp"
#include "ehcut/solver.hpp"
#include "maxflow.hpp"

// Classical kappa/lambda by Menger: vertex version splits each vertex into an
// in/out pair and minimizes s-t flow over a dominating family of pairs (a
// fixed low-degree vertex against every non-neighbor, plus non-adjacent pairs
// inside its neighborhood). Certificates are the lexicographically smallest
// minimum cuts among those the attaining pairs produce.

namespace ehcut {

namespace {

using detail::FlowNetwork;

bool is_connected(const Topology& g) {
    const std::uint32_t n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<VertexId> queue{0};
    seen[0] = 1;
    std::uint32_t count = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        ++count;
        for (VertexId w : g.neighbors(queue[qi]))
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    }
    return count == n;
}

VertexId min_degree_vertex(const Topology& g) {
    VertexId best = 0;
    for (VertexId v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) < g.degree(best)) best = v;
    return best;
}

// in-node 2v, out-node 2v+1; internal arcs carry the unit vertex capacity.
FlowNetwork build_split_network(const Topology& g) {
    const int big = static_cast<int>(g.vertex_count());
    FlowNetwork net(2 * static_cast<int>(g.vertex_count()));
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        net.add_arc_pair(2 * static_cast<int>(v), 2 * static_cast<int>(v) + 1, 1, 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (VertexId w : g.neighbors(v))
            if (v < w) {
                net.add_arc_pair(2 * static_cast<int>(v) + 1, 2 * static_cast<int>(w), big, 0);
                net.add_arc_pair(2 * static_cast<int>(w) + 1, 2 * static_cast<int>(v), big, 0);
            }
    net.freeze();
    return net;
}

std::vector<VertexId> extract_vertex_cut(const FlowNetwork& net, const Topology& g,
                                         VertexId s, VertexId t) {
    std::vector<char> reach = net.reachable(2 * static_cast<int>(s) + 1);
    std::vector<VertexId> cut;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (v != s && v != t && reach[2 * v] && !reach[2 * v + 1]) cut.push_back(v);
    return cut;
}

std::vector<Edge> extract_edge_cut(const FlowNetwork& net, const Topology& g, VertexId s) {
    std::vector<char> reach = net.reachable(static_cast<int>(s));
    std::vector<Edge> cut;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (reach[v])
            for (VertexId w : g.neighbors(v))
                if (!reach[w]) cut.push_back(make_edge(v, w));
    std::sort(cut.begin(), cut.end());
    return cut;
}

} // namespace

std::pair<std::uint32_t, CutCertificate> vertex_connectivity(const Topology& g) {
    CutCertificate cert{CutKind::VertexCut, 0, g.name(), {}, {}, Provenance::Solver};
    if (g.vertex_count() < 2) throw InvalidParams("vertex connectivity needs at least 2 vertices");
    if (!is_connected(g)) return {0, cert};

    const VertexId pivot = min_degree_vertex(g);
    auto pivot_nb = g.neighbors(pivot);

    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        if (u != pivot && !g.has_edge(pivot, u)) pairs.emplace_back(pivot, u);
    for (std::size_t i = 0; i < pivot_nb.size(); ++i)
        for (std::size_t j = i + 1; j < pivot_nb.size(); ++j)
            if (!g.has_edge(pivot_nb[i], pivot_nb[j])) pairs.emplace_back(pivot_nb[i], pivot_nb[j]);

    if (pairs.empty()) // complete graph: no separating set exists
        return {g.vertex_count() - 1, cert};

    FlowNetwork net = build_split_network(g);
    std::uint32_t best = static_cast<std::uint32_t>(g.degree(pivot));
    for (auto [s, t] : pairs) {
        net.reset();
        const int flow = net.max_flow(2 * static_cast<int>(s) + 1, 2 * static_cast<int>(t),
                                      static_cast<int>(best));
        if (static_cast<std::uint32_t>(flow) < best) best = static_cast<std::uint32_t>(flow);
    }
    // Second pass: collect the cut of every pair attaining the minimum and keep
    // the lexicographically smallest member set.
    bool have = false;
    for (auto [s, t] : pairs) {
        net.reset();
        const int flow = net.max_flow(2 * static_cast<int>(s) + 1, 2 * static_cast<int>(t),
                                      static_cast<int>(best) + 1);
        if (static_cast<std::uint32_t>(flow) != best) continue;
        std::vector<VertexId> cut = extract_vertex_cut(net, g, s, t);
        if (!have || std::lexicographical_compare(cut.begin(), cut.end(),
                                                  cert.vertices.begin(), cert.vertices.end())) {
            cert.vertices = std::move(cut);
            have = true;
        }
    }
    return {best, cert};
}

std::pair<std::uint32_t, CutCertificate> edge_connectivity(const Topology& g) {
    CutCertificate cert{CutKind::EdgeCut, 0, g.name(), {}, {}, Provenance::Solver};
    if (g.vertex_count() < 2) throw InvalidParams("edge connectivity needs at least 2 vertices");
    if (!is_connected(g)) return {0, cert};

    FlowNetwork net(static_cast<int>(g.vertex_count()));
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (VertexId w : g.neighbors(v))
            if (v < w) net.add_arc_pair(static_cast<int>(v), static_cast<int>(w), 1, 1);
    net.freeze();

    const VertexId pivot = min_degree_vertex(g);
    std::uint32_t best = static_cast<std::uint32_t>(g.degree(pivot));
    for (VertexId u = 1; u < g.vertex_count(); ++u) {
        net.reset();
        const int flow = net.max_flow(0, static_cast<int>(u), static_cast<int>(best));
        if (static_cast<std::uint32_t>(flow) < best) best = static_cast<std::uint32_t>(flow);
    }
    bool have = false;
    for (VertexId u = 1; u < g.vertex_count(); ++u) {
        net.reset();
        const int flow = net.max_flow(0, static_cast<int>(u), static_cast<int>(best) + 1);
        if (static_cast<std::uint32_t>(flow) != best) continue;
        std::vector<Edge> cut = extract_edge_cut(net, g, 0);
        if (!have || std::lexicographical_compare(cut.begin(), cut.end(),
                                                  cert.edges.begin(), cert.edges.end())) {
            cert.edges = std::move(cut);
            have = true;
        }
    }
    return {best, cert};
}

} // namespace ehcut
