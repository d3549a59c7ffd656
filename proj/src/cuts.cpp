#include "ehcut/cuts.hpp"

#include <algorithm>
#include <queue>

#include "ehcut/errors.hpp"
#include "mask_graph.hpp"

namespace ehcut {

const char* to_string(CutKind k) {
    return k == CutKind::VertexCut ? "vertex-cut" : "edge-cut";
}

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::Canonical: return "canonical";
        case Provenance::Solver: return "solver";
        case Provenance::User: return "user";
    }
    return "?";
}

std::string to_record(const CutCertificate& cert, int label_bits) {
    std::string out;
    out += "kind: ";
    out += to_string(cert.kind);
    out += "\nh: " + std::to_string(cert.h);
    out += "\nparams: " + cert.instance;
    out += "\nmembers:";
    if (cert.kind == CutKind::VertexCut) {
        for (VertexId v : cert.vertices) out += " " + to_bit_string(v, label_bits);
    } else {
        for (const Edge& e : cert.edges)
            out += " " + to_bit_string(e.u, label_bits) + "-" + to_bit_string(e.v, label_bits);
    }
    out += "\nsize: " + std::to_string(cert.size());
    out += "\nprovenance: ";
    out += to_string(cert.provenance);
    out += "\n";
    return out;
}

std::uint64_t eh_cut_size_formula(int s, int h) {
    return (std::uint64_t{1} << h) * static_cast<std::uint64_t>(s + 1 - h);
}

namespace {

void check_canonical_range(TopologyParams params, int h) {
    if (!(0 <= h && h <= params.s && params.s <= params.t))
        throw InvalidParams("canonical cuts need 0 <= h <= s <= t, got h=" + std::to_string(h) +
                            " s=" + std::to_string(params.s) + " t=" + std::to_string(params.t));
}

std::string eh_name(TopologyParams p) {
    return "eh(" + std::to_string(p.s) + "," + std::to_string(p.t) + ")";
}

} // namespace

std::vector<VertexId> canonical_core(TopologyParams params, int h) {
    check_canonical_range(params, h);
    const int zero_bits = params.s + params.t + 1 - h;
    std::vector<VertexId> core;
    core.reserve(std::size_t{1} << h);
    for (VertexId y = 0; y < (VertexId{1} << h); ++y)
        core.push_back(y << zero_bits);
    return core;
}

CutCertificate canonical_vertex_cut(TopologyParams params, int h) {
    CutCertificate cert{CutKind::VertexCut, h, eh_name(params), {}, {}, Provenance::Canonical};
    const int t = params.t;
    for (VertexId x : canonical_core(params, h)) {
        cert.vertices.push_back(x | 1u); // last-bit neighbor
        for (int r = t + 1; r <= t + params.s - h; ++r)
            cert.vertices.push_back(x ^ (VertexId{1} << r)); // free class-bit flips
    }
    std::sort(cert.vertices.begin(), cert.vertices.end());
    return cert;
}

CutCertificate canonical_edge_cut(TopologyParams params, int h) {
    CutCertificate cert{CutKind::EdgeCut, h, eh_name(params), {}, {}, Provenance::Canonical};
    const int t = params.t;
    for (VertexId x : canonical_core(params, h)) {
        cert.edges.push_back(make_edge(x, x | 1u));
        for (int r = t + 1; r <= t + params.s - h; ++r)
            cert.edges.push_back(make_edge(x, x ^ (VertexId{1} << r)));
    }
    std::sort(cert.edges.begin(), cert.edges.end());
    return cert;
}

namespace {

void check_qn_range(int n, int h, int max_h) {
    if (n < 1 || h < 0 || h > max_h)
        throw InvalidParams("hypercube canonical cut needs 0 <= h <= " + std::to_string(max_h) +
                            " for n=" + std::to_string(n));
}

} // namespace

CutCertificate canonical_qn_vertex_cut(int n, int h) {
    check_qn_range(n, h, n - 2);
    CutCertificate cert{CutKind::VertexCut, h, "q" + std::to_string(n), {}, {},
                        Provenance::Canonical};
    for (VertexId x = 0; x < (VertexId{1} << h); ++x)
        for (int j = h; j < n; ++j) cert.vertices.push_back(x | (VertexId{1} << j));
    std::sort(cert.vertices.begin(), cert.vertices.end());
    return cert;
}

CutCertificate canonical_qn_edge_cut(int n, int h) {
    check_qn_range(n, h, n - 1);
    CutCertificate cert{CutKind::EdgeCut, h, "q" + std::to_string(n), {}, {},
                        Provenance::Canonical};
    for (VertexId x = 0; x < (VertexId{1} << h); ++x)
        for (int j = h; j < n; ++j) cert.edges.push_back(make_edge(x, x | (VertexId{1} << j)));
    std::sort(cert.edges.begin(), cert.edges.end());
    return cert;
}

namespace {

void validate_vertices(const Topology& g, std::span<const VertexId> removed) {
    for (VertexId v : removed)
        if (v >= g.vertex_count())
            throw InvalidParams("vertex " + std::to_string(v) + " outside the graph");
}

void validate_edges(const Topology& g, std::span<const Edge> removed) {
    for (const Edge& e : removed)
        if (e.u >= g.vertex_count() || e.v >= g.vertex_count() || !g.has_edge(e.u, e.v))
            throw NotAnEdge("(" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") is not an edge of " + g.name());
}

// Generic residual scan; the <=64 vertex case goes through mask_cut_check.
ResidualProfile profile_generic(const Topology& g, const std::vector<char>& vertex_removed,
                                const std::vector<Edge>& edges_removed) {
    const std::uint32_t n = g.vertex_count();
    auto edge_removed = [&](VertexId a, VertexId b) {
        if (edges_removed.empty()) return false;
        return std::binary_search(edges_removed.begin(), edges_removed.end(), make_edge(a, b));
    };

    ResidualProfile profile;
    profile.min_degree = -1;
    std::vector<char> seen(n, 0);
    std::vector<std::pair<std::uint32_t, VertexId>> comps; // (size, smallest id)
    std::vector<VertexId> queue;
    for (VertexId v = 0; v < n; ++v) {
        if (vertex_removed[v]) continue;
        int deg = 0;
        for (VertexId w : g.neighbors(v))
            if (!vertex_removed[w] && !edge_removed(v, w)) ++deg;
        if (profile.min_degree < 0 || deg < profile.min_degree) profile.min_degree = deg;
        if (seen[v]) continue;
        std::uint32_t size = 0;
        queue.assign(1, v);
        seen[v] = 1;
        while (!queue.empty()) {
            VertexId u = queue.back();
            queue.pop_back();
            ++size;
            for (VertexId w : g.neighbors(u))
                if (!vertex_removed[w] && !seen[w] && !edge_removed(u, w)) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
        comps.emplace_back(size, v);
    }
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    profile.component_count = static_cast<std::uint32_t>(comps.size());
    for (const auto& [size, id] : comps) profile.component_sizes.push_back(size);
    return profile;
}

} // namespace

ResidualProfile residual_profile_vertices(const Topology& g, std::span<const VertexId> removed) {
    validate_vertices(g, removed);
    std::vector<char> gone(g.vertex_count(), 0);
    for (VertexId v : removed) gone[v] = 1;
    return profile_generic(g, gone, {});
}

ResidualProfile residual_profile_edges(const Topology& g, std::span<const Edge> removed) {
    validate_edges(g, removed);
    std::vector<Edge> sorted(removed.begin(), removed.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<char> gone(g.vertex_count(), 0);
    return profile_generic(g, gone, sorted);
}

bool is_h_vertex_cut(const Topology& g, std::span<const VertexId> removed, int h) {
    validate_vertices(g, removed);
    if (g.vertex_count() <= 64) {
        detail::MaskGraph mg(g);
        std::uint64_t mask = 0;
        for (VertexId v : removed) mask |= std::uint64_t{1} << v;
        return detail::mask_vertex_cut_check(mg, mask, h);
    }
    ResidualProfile profile = residual_profile_vertices(g, removed);
    return profile.component_count >= 2 && profile.min_degree >= h;
}

bool is_h_edge_cut(const Topology& g, std::span<const Edge> removed, int h) {
    validate_edges(g, removed);
    if (g.vertex_count() <= 64) {
        detail::MaskGraph mg(g);
        return detail::mask_edge_cut_check(mg, removed.data(), static_cast<int>(removed.size()), h);
    }
    ResidualProfile profile = residual_profile_edges(g, removed);
    return profile.component_count >= 2 && profile.min_degree >= h;
}

bool certificate_is_valid(const Topology& g, const CutCertificate& cert) {
    return cert.kind == CutKind::VertexCut ? is_h_vertex_cut(g, cert.vertices, cert.h)
                                           : is_h_edge_cut(g, cert.edges, cert.h);
}

} // namespace ehcut
