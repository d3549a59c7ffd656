#include "doctest.h"

#include <algorithm>
#include <set>

#include "ehcut/errors.hpp"
#include "ehcut/topology.hpp"

using namespace ehcut;

namespace {

// Independent edge oracle straight from the three membership rules, evaluated
// on label strings over all vertex pairs. Deliberately avoids the builder's
// per-vertex neighbor formulas.
std::vector<Edge> definition_edges(int s, int t) {
    const int bits = s + t + 1;
    const VertexId n = VertexId{1} << bits;
    auto block = [&](VertexId v, int hi, int lo) {
        // characters of u[hi:lo], label indexing u_{bits-1}...u_0
        std::string label = to_bit_string(v, bits);
        return label.substr(static_cast<std::size_t>(bits - 1 - hi),
                            static_cast<std::size_t>(hi - lo + 1));
    };
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            const bool e1 = block(u, s + t, 1) == block(v, s + t, 1) && (u & 1) != (v & 1);
            const bool e2 = block(u, s + t, t + 1) == block(v, s + t, t + 1) &&
                            hamming_distance(block(u, t, 1), block(v, t, 1)) == 1 &&
                            (u & 1) == 1 && (v & 1) == 1;
            const bool e3 = block(u, t, 1) == block(v, t, 1) &&
                            hamming_distance(block(u, s + t, t + 1), block(v, s + t, t + 1)) == 1 &&
                            (u & 1) == 0 && (v & 1) == 0;
            if (e1 || e2 || e3) edges.push_back({u, v});
        }
    }
    return edges;
}

bool parity_bipartition_ok(const Topology& g) {
    for (const Edge& e : g.edge_list())
        if (hamming_distance(e.u, e.v) % 2 == 0) return false;
    return true;
}

bool bfs_finds_odd_cycle(const Topology& g) {
    std::vector<int> layer(g.vertex_count(), -1);
    std::vector<VertexId> queue{0};
    layer[0] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        VertexId u = queue[qi];
        for (VertexId w : g.neighbors(u)) {
            if (layer[w] == -1) {
                layer[w] = layer[u] + 1;
                queue.push_back(w);
            } else if (layer[w] == layer[u]) {
                return true;
            }
        }
    }
    return false;
}

} // namespace

TEST_CASE("eh(1,1) matches the eight hand-checked edges") {
    const Topology g = build_eh({1, 1});
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 8);
    const std::vector<Edge> expected = {{0, 1}, {0, 4}, {1, 3}, {2, 3},
                                        {2, 6}, {4, 5}, {5, 7}, {6, 7}};
    CHECK(g.edge_list() == expected);
}

TEST_CASE("builder agrees with the definition oracle") {
    for (int s = 1; s <= 3; ++s) {
        for (int t = 1; t <= 3; ++t) {
            const Topology g = build_eh({s, t});
            CHECK(g.edge_list() == definition_edges(s, t));
        }
    }
}

TEST_CASE("adjacency is sorted, symmetric, loop-free") {
    for (const Topology& g : {build_eh({2, 3}), build_qn(4), build_dc(2)}) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            auto nb = g.neighbors(v);
            for (std::size_t i = 0; i < nb.size(); ++i) {
                CHECK(nb[i] != v);
                if (i > 0) CHECK(nb[i - 1] < nb[i]); // sorted and duplicate-free
                CHECK(g.has_edge(nb[i], v));
            }
        }
    }
}

TEST_CASE("eh counting and degree laws") {
    CHECK(build_eh({1, 2}).edge_count() == 20);
    for (int s = 1; s <= 4; ++s) {
        for (int t = s; s + t <= 8; ++t) {
            const Topology g = build_eh({s, t});
            const std::uint64_t n = std::uint64_t{1} << (s + t + 1);
            CHECK(g.vertex_count() == n);
            CHECK(g.edge_count() == (std::uint64_t{1} << (s + t - 1)) *
                                        static_cast<std::uint64_t>(s + t + 2));
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                CHECK(g.degree(v) == ((v & 1) ? t + 1 : s + 1));
        }
    }
}

TEST_CASE("edge class partition and counts") {
    for (int s = 1; s <= 3; ++s) {
        for (int t = 1; t <= 3; ++t) {
            const Topology g = build_eh({s, t});
            std::uint64_t e1 = 0, e2 = 0, e3 = 0;
            for (const Edge& e : g.edge_list()) {
                const EdgeKind kind = edge_kind(g, e.u, e.v);
                switch (kind.cls) {
                    case EdgeClass::E1:
                        CHECK(kind.dim == 0);
                        CHECK((e.u ^ e.v) == 1);
                        ++e1;
                        break;
                    case EdgeClass::E2:
                        CHECK((e.u & 1) == 1);
                        CHECK(kind.dim >= 1);
                        CHECK(kind.dim <= t);
                        ++e2;
                        break;
                    case EdgeClass::E3:
                        CHECK((e.u & 1) == 0);
                        CHECK(kind.dim > t);
                        CHECK(kind.dim <= s + t);
                        ++e3;
                        break;
                }
            }
            CHECK(e1 == std::uint64_t{1} << (s + t));
            CHECK(e2 == static_cast<std::uint64_t>(t) << (s + t - 1));
            CHECK(e3 == static_cast<std::uint64_t>(s) << (s + t - 1));
        }
    }
}

TEST_CASE("edge_kind on the figure examples") {
    const Topology g = build_eh({1, 1});
    CHECK(edge_kind(g, 0b000, 0b001) == EdgeKind{EdgeClass::E1, 0});
    CHECK(edge_kind(g, 0b001, 0b011) == EdgeKind{EdgeClass::E2, 1});
    CHECK(edge_kind(g, 0b000, 0b100) == EdgeKind{EdgeClass::E3, 2});
    CHECK_THROWS_AS(edge_kind(g, 0b000, 0b011), NotAnEdge);
    CHECK_THROWS_AS(edge_kind(build_qn(3), 0, 1), InvalidParams);
}

TEST_CASE("eh is a bipartite spanning subgraph of the full cube") {
    for (int s = 1; s <= 3; ++s) {
        for (int t = s; s + t <= 7; ++t) {
            const Topology g = build_eh({s, t});
            CHECK(parity_bipartition_ok(g));
            CHECK_FALSE(bfs_finds_odd_cycle(g));
            const Topology q = build_qn(s + t + 1);
            for (const Edge& e : g.edge_list()) CHECK(q.has_edge(e.u, e.v));
        }
    }
}

TEST_CASE("construction guards and parameter checks") {
    CHECK_THROWS_AS(build_eh({0, 1}), InvalidParams);
    CHECK_THROWS_AS(build_eh({1, 0}), InvalidParams);
    CHECK_THROWS_AS(build_eh({12, 13}), InstanceTooLarge); // 26 bits > guard
    CHECK_THROWS_AS(build_eh({3, 3}, 6), InstanceTooLarge);
    CHECK_THROWS_AS(build_qn(0), InvalidParams);
    CHECK_THROWS_AS(build_qn(25), InstanceTooLarge);
    CHECK_THROWS_AS(build_dc(0), InvalidParams);
}

TEST_CASE("hypercube builder") {
    const Topology q1 = build_qn(1);
    CHECK(q1.vertex_count() == 2);
    CHECK(q1.edge_count() == 1);
    const Topology q3 = build_qn(3);
    CHECK(q3.vertex_count() == 8);
    CHECK(q3.edge_count() == 12);
    for (VertexId v = 0; v < q3.vertex_count(); ++v) CHECK(q3.degree(v) == 3);
    for (const Edge& e : q3.edge_list()) CHECK(hamming_distance(e.u, e.v) == 1);
}

TEST_CASE("dual-cube alias") {
    const Topology dc1 = build_dc(1);
    CHECK(dc1.vertex_count() == 8);
    CHECK(dc1.edge_count() == 8);
    CHECK(same_graph(dc1, build_eh({1, 1})));
    CHECK(dc1.kind() == TopologyKind::DC);
    CHECK(build_dc(2).vertex_count() == 32);
    CHECK(same_graph(build_dc(2), build_eh({2, 2})));
}

TEST_CASE("decomposition halves equal the smaller instance") {
    SUBCASE("eh(1,2) along a cluster bit") {
        const Topology g = build_eh({1, 2});
        const Decomposition d = decompose(g, 1);
        CHECK(same_graph(d.half0.graph, build_eh({1, 1})));
        CHECK(same_graph(d.half1.graph, build_eh({1, 1})));
        CHECK(d.cross_edges.size() == 4);
    }
    SUBCASE("eh(2,2) along a class bit") {
        const Topology g = build_eh({2, 2});
        const Decomposition d = decompose(g, 4);
        CHECK(same_graph(d.half0.graph, build_eh({1, 2})));
        CHECK(same_graph(d.half1.graph, build_eh({1, 2})));
        CHECK(d.cross_edges.size() == 8);
    }
}

TEST_CASE("decomposition cross edges form a matching across the halves") {
    for (int s = 1; s <= 3; ++s) {
        for (int t = s; s + t <= 7; ++t) {
            const Topology g = build_eh({s, t});
            for (int r = 1; r <= s + t; ++r) {
                const bool cluster = r <= t;
                if ((cluster && t < 2) || (!cluster && s < 2)) {
                    CHECK_THROWS_AS(decompose(g, r), UnsupportedDecomposition);
                    continue;
                }
                const Decomposition d = decompose(g, r);
                CHECK(d.cross_edges.size() == std::uint64_t{1} << (s + t - 1));
                std::set<VertexId> endpoints;
                const VertexId bit = VertexId{1} << r;
                for (const Edge& e : d.cross_edges) {
                    CHECK((e.u & bit) == 0);
                    CHECK((e.v & bit) == bit);
                    CHECK((e.u ^ e.v) == bit);
                    endpoints.insert(e.u);
                    endpoints.insert(e.v);
                }
                CHECK(endpoints.size() == 2 * d.cross_edges.size());
                const TopologyParams expect = cluster ? TopologyParams{s, t - 1}
                                                      : TopologyParams{s - 1, t};
                CHECK(same_graph(d.half0.graph, build_eh(expect)));
                CHECK(same_graph(d.half1.graph, build_eh(expect)));
                // relabel maps invert delete_bit on each side
                for (VertexId nv = 0; nv < d.half0.graph.vertex_count(); ++nv) {
                    CHECK(delete_bit(d.half0.original_ids[nv], r) == nv);
                    CHECK(delete_bit(d.half1.original_ids[nv], r) == nv);
                }
            }
        }
    }
}

TEST_CASE("decomposition rejects bad dimensions") {
    const Topology g = build_eh({1, 1});
    CHECK_THROWS_AS(decompose(g, 0), InvalidParams);
    CHECK_THROWS_AS(decompose(g, 3), InvalidParams);
    CHECK_THROWS_AS(decompose(g, 1), UnsupportedDecomposition); // t would drop to 0
    CHECK_THROWS_AS(decompose(g, 2), UnsupportedDecomposition); // s would drop to 0
    CHECK_THROWS_AS(decompose(build_qn(3), 1), InvalidParams);
}

TEST_CASE("block swap map is the isomorphism onto the mirrored instance") {
    SUBCASE("all-zero vertex maps to the flipped last bit") {
        CHECK(iso_swap_map({1, 2}, 0) == 1);
    }
    SUBCASE("involution up to parameter swap") {
        for (VertexId u = 0; u < 16; ++u)
            CHECK(iso_swap_map({2, 1}, iso_swap_map({1, 2}, u)) == u);
    }
    SUBCASE("cluster edges map to class edges") {
        const Topology g = build_eh({1, 2});
        const Topology m = build_eh({2, 1});
        for (const Edge& e : g.edge_list()) {
            const EdgeKind from = edge_kind(g, e.u, e.v);
            const EdgeKind to =
                edge_kind(m, iso_swap_map({1, 2}, e.u), iso_swap_map({1, 2}, e.v));
            if (from.cls == EdgeClass::E1) CHECK(to.cls == EdgeClass::E1);
            if (from.cls == EdgeClass::E2) CHECK(to.cls == EdgeClass::E3);
            if (from.cls == EdgeClass::E3) CHECK(to.cls == EdgeClass::E2);
        }
    }
    SUBCASE("verified over a parameter sweep") {
        for (int s = 1; s <= 3; ++s) {
            for (int t = 1; s + t <= 7; ++t) {
                const Topology g = build_eh({s, t});
                const Topology m = build_eh({t, s});
                std::vector<VertexId> map(g.vertex_count());
                for (VertexId u = 0; u < g.vertex_count(); ++u)
                    map[u] = iso_swap_map({s, t}, u);
                CHECK(verify_isomorphism(g, m, map));
            }
        }
    }
}

TEST_CASE("verify_isomorphism rejects broken maps") {
    const Topology g = build_eh({1, 1});
    std::vector<VertexId> identity(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) identity[v] = v;
    CHECK(verify_isomorphism(g, g, identity));

    // swap the images of an adjacent and a non-adjacent vertex of 0
    std::vector<VertexId> bad = identity;
    std::swap(bad[1], bad[2]); // 0-1 is an edge, 0-2 is not
    CHECK_FALSE(verify_isomorphism(g, g, bad));

    std::vector<VertexId> collapsed(g.vertex_count(), 0);
    CHECK_THROWS_AS(verify_isomorphism(g, g, collapsed), NotABijection);
    CHECK_THROWS_AS(verify_isomorphism(g, build_eh({1, 2}), identity), NotABijection);
}
