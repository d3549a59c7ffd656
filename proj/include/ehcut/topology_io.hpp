#ifndef EHCUT_TOPOLOGY_IO_HPP
#define EHCUT_TOPOLOGY_IO_HPP

#include <iosfwd>
#include <string>

#include "ehcut/topology.hpp"

namespace ehcut {

// One edge per line "u v kind", decimal ids with u < v, (u,v) ascending.
// A single header comment carries kind and parameters for round-tripping.
void write_edge_list(const Topology& g, std::ostream& os);

// Graphviz format; node names are the binary labels, edges carry kind=E1/E2/E3.
void write_dot(const Topology& g, std::ostream& os);

// Rebuilds a topology from write_edge_list output.
Topology parse_edge_list(std::istream& is);

std::string to_edge_list_string(const Topology& g);
std::string to_dot_string(const Topology& g);

} // namespace ehcut

#endif
