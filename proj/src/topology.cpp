#include "ehcut/topology.hpp"

#include <algorithm>
#include <bit>

#include "ehcut/errors.hpp"

namespace ehcut {

Topology::Topology(TopologyKind kind, TopologyParams params, int bits,
                   std::vector<std::uint32_t> offsets, std::vector<VertexId> adj)
    : kind_(kind), params_(params), bits_(bits),
      offsets_(std::move(offsets)), adj_(std::move(adj)) {
    if (vertex_count() <= 64) {
        masks_.assign(vertex_count(), 0);
        for (VertexId v = 0; v < vertex_count(); ++v)
            for (VertexId w : neighbors(v)) masks_[v] |= std::uint64_t{1} << w;
    }
}

bool Topology::has_edge(VertexId u, VertexId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Topology::edge_list() const {
    std::vector<Edge> edges;
    edges.reserve(edge_count());
    for (VertexId u = 0; u < vertex_count(); ++u)
        for (VertexId v : neighbors(u))
            if (u < v) edges.push_back({u, v});
    return edges; // CSR order is already (u, v) ascending
}

std::string Topology::name() const {
    switch (kind_) {
        case TopologyKind::EH:
            return "eh(" + std::to_string(params_.s) + "," + std::to_string(params_.t) + ")";
        case TopologyKind::DC:
            return "dc(" + std::to_string(params_.s) + ")";
        case TopologyKind::Qn:
            return "q" + std::to_string(bits_);
    }
    return "?";
}

bool same_graph(const Topology& a, const Topology& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    for (VertexId v = 0; v < a.vertex_count(); ++v) {
        auto na = a.neighbors(v);
        auto nb = b.neighbors(v);
        if (!std::equal(na.begin(), na.end(), nb.begin(), nb.end())) return false;
    }
    return true;
}

namespace {

void check_guard(int bits, int bit_guard) {
    if (bits > bit_guard)
        throw InstanceTooLarge("instance needs " + std::to_string(bits) +
                               " label bits, guard is " + std::to_string(bit_guard));
}

Topology from_neighbor_fn(TopologyKind kind, TopologyParams params, int bits, auto&& neighbor_fn) {
    const std::uint32_t n = std::uint32_t{1} << bits;
    std::vector<std::uint32_t> offsets(n + 1, 0);
    std::vector<VertexId> scratch;
    for (VertexId v = 0; v < n; ++v) {
        scratch.clear();
        neighbor_fn(v, scratch);
        offsets[v + 1] = offsets[v] + static_cast<std::uint32_t>(scratch.size());
    }
    std::vector<VertexId> adj(offsets[n]);
    for (VertexId v = 0; v < n; ++v) {
        scratch.clear();
        neighbor_fn(v, scratch);
        std::sort(scratch.begin(), scratch.end());
        std::copy(scratch.begin(), scratch.end(), adj.begin() + offsets[v]);
    }
    return Topology(kind, params, bits, std::move(offsets), std::move(adj));
}

Topology build_exchanged(TopologyKind kind, TopologyParams params, int bit_guard) {
    if (params.s < 1 || params.t < 1)
        throw InvalidParams("exchanged hypercube requires s >= 1 and t >= 1, got s=" +
                            std::to_string(params.s) + " t=" + std::to_string(params.t));
    const int bits = params.s + params.t + 1;
    check_guard(bits, bit_guard);
    const int t = params.t;
    return from_neighbor_fn(kind, params, bits, [&](VertexId v, std::vector<VertexId>& out) {
        out.push_back(v ^ 1u); // last-bit flip
        if (v & 1u) {
            for (int r = 1; r <= t; ++r) out.push_back(v ^ (VertexId{1} << r));
        } else {
            for (int r = t + 1; r < bits; ++r) out.push_back(v ^ (VertexId{1} << r));
        }
    });
}

} // namespace

Topology build_eh(TopologyParams params, int bit_guard) {
    return build_exchanged(TopologyKind::EH, params, bit_guard);
}

Topology build_dc(int n, int bit_guard) {
    if (n < 1) throw InvalidParams("dual-cube requires n >= 1, got n=" + std::to_string(n));
    return build_exchanged(TopologyKind::DC, {n, n}, bit_guard);
}

Topology build_qn(int n, int bit_guard) {
    if (n < 1) throw InvalidParams("hypercube requires n >= 1, got n=" + std::to_string(n));
    check_guard(n, bit_guard);
    return from_neighbor_fn(TopologyKind::Qn, {}, n, [&](VertexId v, std::vector<VertexId>& out) {
        for (int r = 0; r < n; ++r) out.push_back(v ^ (VertexId{1} << r));
    });
}

const char* to_string(EdgeClass cls) {
    switch (cls) {
        case EdgeClass::E1: return "E1";
        case EdgeClass::E2: return "E2";
        case EdgeClass::E3: return "E3";
    }
    return "?";
}

EdgeKind edge_kind(const Topology& g, VertexId u, VertexId v) {
    if (g.kind() == TopologyKind::Qn)
        throw InvalidParams("edge classification is defined for exchanged hypercubes only");
    if (u >= g.vertex_count() || v >= g.vertex_count() || !g.has_edge(u, v))
        throw NotAnEdge("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    const VertexId d = u ^ v;
    if (d == 1u) return {EdgeClass::E1, 0};
    const int r = std::countr_zero(d);
    return r <= g.params().t ? EdgeKind{EdgeClass::E2, r} : EdgeKind{EdgeClass::E3, r};
}

Decomposition decompose(const Topology& g, int r) {
    if (g.kind() == TopologyKind::Qn)
        throw InvalidParams("decomposition is defined for exchanged hypercubes only");
    const auto [s, t] = g.params();
    if (r < 1 || r > s + t)
        throw InvalidParams("split dimension r=" + std::to_string(r) +
                            " outside [1," + std::to_string(s + t) + "]");
    const bool cluster_bit = r <= t;
    if (cluster_bit && t < 2)
        throw UnsupportedDecomposition("splitting a cluster bit requires t >= 2");
    if (!cluster_bit && s < 2)
        throw UnsupportedDecomposition("splitting a class bit requires s >= 2");

    const TopologyParams half_params = cluster_bit ? TopologyParams{s, t - 1}
                                                   : TopologyParams{s - 1, t};
    const VertexId bit = VertexId{1} << r;

    // Induced subgraph on { v : bit r of v == i }, relabeled by deleting bit r.
    auto induce_half = [&](VertexId side) {
        const std::uint32_t half_n = g.vertex_count() / 2;
        std::vector<std::uint32_t> offsets(half_n + 1, 0);
        std::vector<VertexId> adj;
        adj.reserve(g.edge_count());
        std::vector<VertexId> originals(half_n);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if ((v & bit) != side) continue;
            const VertexId nv = delete_bit(v, r);
            originals[nv] = v;
            for (VertexId w : g.neighbors(v))
                if ((w & bit) == side) adj.push_back(delete_bit(w, r));
            offsets[nv + 1] = static_cast<std::uint32_t>(adj.size());
        }
        // delete_bit is increasing on each side, so CSR rows and neighbor
        // lists stay sorted.
        return DecompositionHalf{
            Topology(g.kind(), half_params, s + t, std::move(offsets), std::move(adj)),
            std::move(originals)};
    };

    Decomposition out{r, induce_half(0), induce_half(bit), {}};
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!(v & bit) && g.has_edge(v, v | bit)) out.cross_edges.push_back({v, v | bit});
    return out;
}

VertexId iso_swap_map(TopologyParams params, VertexId u) {
    const auto [s, t] = params;
    if (s < 1 || t < 1) throw InvalidParams("iso_swap_map requires s,t >= 1");
    if (u >= (VertexId{1} << (s + t + 1)))
        throw InvalidParams("vertex id out of range for EH(s,t)");
    const VertexId cluster = (u >> 1) & ((VertexId{1} << t) - 1u);
    const VertexId cls = u >> (t + 1);
    const VertexId last = (u & 1u) ^ 1u;
    // In EH(t,s) the old s-block occupies bits 1..s and the old t-block bits s+1..s+t.
    return (cluster << (s + 1)) | (cls << 1) | last;
}

bool verify_isomorphism(const Topology& g, const Topology& h, std::span<const VertexId> map) {
    if (g.vertex_count() != h.vertex_count())
        throw NotABijection("vertex counts differ: " + std::to_string(g.vertex_count()) +
                            " vs " + std::to_string(h.vertex_count()));
    if (map.size() != g.vertex_count())
        throw NotABijection("map covers " + std::to_string(map.size()) + " of " +
                            std::to_string(g.vertex_count()) + " vertices");
    std::vector<char> hit(h.vertex_count(), 0);
    for (VertexId img : map) {
        if (img >= h.vertex_count() || hit[img])
            throw NotABijection("map is not a bijection onto the target vertex set");
        hit[img] = 1;
    }
    if (g.edge_count() != h.edge_count()) return false;
    std::vector<VertexId> mapped;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto nb = g.neighbors(v);
        mapped.assign(nb.begin(), nb.end());
        for (VertexId& w : mapped) w = map[w];
        std::sort(mapped.begin(), mapped.end());
        auto target = h.neighbors(map[v]);
        if (!std::equal(mapped.begin(), mapped.end(), target.begin(), target.end()))
            return false;
    }
    return true;
}

} // namespace ehcut
