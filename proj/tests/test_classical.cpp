#include "doctest.h"

#include "ehcut/solver.hpp"

using namespace ehcut;

TEST_CASE("classical connectivity on exchanged hypercubes") {
    CHECK(vertex_connectivity(build_eh({1, 1})).first == 2);
    CHECK(vertex_connectivity(build_eh({2, 3})).first == 3);
    CHECK(edge_connectivity(build_eh({1, 2})).first == 2);
    CHECK(edge_connectivity(build_eh({3, 3})).first == 4);
}

TEST_CASE("classical connectivity on hypercubes") {
    CHECK(vertex_connectivity(build_qn(4)).first == 4);
    CHECK(edge_connectivity(build_qn(3)).first == 3);
}

TEST_CASE("kappa equals lambda equals s+1 over the sweep") {
    for (int s = 1; s <= 3; ++s) {
        for (int t = s; s + t <= 7; ++t) {
            const Topology g = build_eh({s, t});
            const auto [kappa, kcert] = vertex_connectivity(g);
            const auto [lambda, lcert] = edge_connectivity(g);
            CHECK(kappa == static_cast<std::uint32_t>(s) + 1);
            CHECK(lambda == static_cast<std::uint32_t>(s) + 1);
            CHECK(kcert.size() == kappa);
            CHECK(lcert.size() == lambda);
            CHECK(is_h_vertex_cut(g, kcert.vertices, 0));
            CHECK(is_h_edge_cut(g, lcert.edges, 0));

            // sandwich against the minimum degree
            std::uint32_t min_deg = ~std::uint32_t{0};
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                min_deg = std::min(min_deg, static_cast<std::uint32_t>(g.degree(v)));
            CHECK(kappa <= lambda);
            CHECK(lambda <= min_deg);
        }
    }
}

TEST_CASE("mirrored parameters give the same connectivity") {
    CHECK(vertex_connectivity(build_eh({3, 2})).first == 3);
    CHECK(edge_connectivity(build_eh({3, 2})).first == 3);
}

TEST_CASE("single edge graph") {
    const Topology q1 = build_qn(1);
    const auto [kappa, kcert] = vertex_connectivity(q1);
    CHECK(kappa == 1); // complete graph: no separating set, convention n-1
    CHECK(kcert.size() == 0);
    const auto [lambda, lcert] = edge_connectivity(q1);
    CHECK(lambda == 1);
    CHECK(lcert.edges == std::vector<Edge>{{0, 1}});
}

TEST_CASE("certificates are deterministic") {
    const Topology g = build_eh({2, 2});
    const auto a = vertex_connectivity(g);
    const auto b = vertex_connectivity(g);
    CHECK(a.first == b.first);
    CHECK(a.second.vertices == b.second.vertices);
    const auto c = edge_connectivity(g);
    const auto d = edge_connectivity(g);
    CHECK(c.second.edges == d.second.edges);
}
