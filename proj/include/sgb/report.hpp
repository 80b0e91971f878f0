#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sgb/indices.hpp"
#include "sgb/sgb_graph.hpp"

namespace sgb {

using Json = nlohmann::ordered_json;

// Exact integers become JSON numbers when they fit in 64 bits, strings otherwise.
Json big_to_json(const BigInt& value);
BigInt big_from_json(const Json& value);
Json rational_to_json(const Rational& value);  // {"num": .., "den": ..}

Json verdict_to_json(const HvVerdict& verdict);

// Full report for one group: descriptor, order, lattice_size, degrees, stars,
// isolated, m1, m2, edge_count, vertex_count, p_value, hv, indices.
Json report_to_json(const SgbGraph& graph, const IndexReport& report);

// Graphviz rendering of B(G). Each subgroup is a node
//   H<id> [label="H<id>(order=k, deg=m)"]
// and each star's pair-side leaves collapse into one box node
//   P<id> [shape=box, label="m pairs"]
// joined by an edge labelled "x<m>". Isolated subgroups have no box.
std::string report_to_dot(const SgbGraph& graph);

// Degree-sequence input for the generic conjecture check. Whitespace
// separated: "V E", then V vertex degrees, then E pairs of endpoint degrees.
// '#' starts a comment line.
struct GenericGraph {
  std::vector<std::uint64_t> degrees;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
};

GenericGraph parse_generic_graph(std::istream& in);

}  // namespace sgb
