#include "ehcut/topology_io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "ehcut/errors.hpp"

namespace ehcut {

namespace {

std::string header_of(const Topology& g) {
    switch (g.kind()) {
        case TopologyKind::EH:
            return "# ehcut edgelist eh " + std::to_string(g.params().s) + " " +
                   std::to_string(g.params().t);
        case TopologyKind::DC:
            return "# ehcut edgelist dc " + std::to_string(g.params().s);
        case TopologyKind::Qn:
            return "# ehcut edgelist qn " + std::to_string(g.bit_length());
    }
    return "#";
}

std::string kind_column(const Topology& g, const Edge& e) {
    if (g.kind() == TopologyKind::Qn) return "Q";
    return to_string(edge_kind(g, e.u, e.v).cls);
}

} // namespace

void write_edge_list(const Topology& g, std::ostream& os) {
    os << header_of(g) << "\n";
    for (const Edge& e : g.edge_list())
        os << e.u << " " << e.v << " " << kind_column(g, e) << "\n";
}

void write_dot(const Topology& g, std::ostream& os) {
    std::string name = g.name();
    std::replace(name.begin(), name.end(), '(', '_');
    std::replace(name.begin(), name.end(), ')', '_');
    std::replace(name.begin(), name.end(), ',', '_');
    os << "graph " << name << " {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        os << "  \"" << g.label(v) << "\";\n";
    for (const Edge& e : g.edge_list())
        os << "  \"" << g.label(e.u) << "\" -- \"" << g.label(e.v)
           << "\" [kind=" << kind_column(g, e) << "];\n";
    os << "}\n";
}

Topology parse_edge_list(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("# ehcut edgelist ", 0) != 0)
        throw InvalidParams("edge list is missing the ehcut header line");
    std::istringstream header(line.substr(std::string("# ehcut edgelist ").size()));
    std::string kind_word;
    header >> kind_word;

    std::vector<Edge> edges;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        VertexId u, v;
        if (!(row >> u >> v)) throw InvalidParams("malformed edge line: " + line);
        edges.push_back(make_edge(u, v));
    }

    auto rebuild = [&](TopologyKind kind, TopologyParams params, int bits) {
        const std::uint32_t n = std::uint32_t{1} << bits;
        std::vector<std::uint32_t> degree(n, 0);
        for (const Edge& e : edges) {
            if (e.v >= n) throw InvalidParams("edge endpoint exceeds vertex count");
            ++degree[e.u];
            ++degree[e.v];
        }
        std::vector<std::uint32_t> offsets(n + 1, 0);
        for (std::uint32_t v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + degree[v];
        std::vector<VertexId> adj(offsets[n]);
        std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
        for (const Edge& e : edges) {
            adj[cursor[e.u]++] = e.v;
            adj[cursor[e.v]++] = e.u;
        }
        for (std::uint32_t v = 0; v < n; ++v)
            std::sort(adj.begin() + offsets[v], adj.begin() + offsets[v + 1]);
        return Topology(kind, params, bits, std::move(offsets), std::move(adj));
    };

    if (kind_word == "eh") {
        int s, t;
        if (!(header >> s >> t)) throw InvalidParams("eh header needs s and t");
        return rebuild(TopologyKind::EH, {s, t}, s + t + 1);
    }
    if (kind_word == "dc") {
        int n;
        if (!(header >> n)) throw InvalidParams("dc header needs n");
        return rebuild(TopologyKind::DC, {n, n}, 2 * n + 1);
    }
    if (kind_word == "qn") {
        int n;
        if (!(header >> n)) throw InvalidParams("qn header needs n");
        return rebuild(TopologyKind::Qn, {}, n);
    }
    throw InvalidParams("unknown topology kind in header: " + kind_word);
}

std::string to_edge_list_string(const Topology& g) {
    std::ostringstream os;
    write_edge_list(g, os);
    return os.str();
}

std::string to_dot_string(const Topology& g) {
    std::ostringstream os;
    write_dot(g, os);
    return os.str();
}

} // namespace ehcut
