#include "sgb/report.hpp"

#include <istream>
#include <limits>
#include <sstream>

#include "sgb/error.hpp"

namespace sgb {

Json big_to_json(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(value);
  }
  return value.str();
}

BigInt big_from_json(const Json& value) {
  if (value.is_number_integer()) return BigInt(value.get<std::int64_t>());
  if (value.is_number_unsigned()) return BigInt(value.get<std::uint64_t>());
  if (value.is_string()) return BigInt(value.get<std::string>());
  throw Error(ErrorKind::kInvalidInput, "expected an integer, got " + value.dump());
}

Json rational_to_json(const Rational& value) {
  return Json{{"num", big_to_json(numerator(value))}, {"den", big_to_json(denominator(value))}};
}

Json verdict_to_json(const HvVerdict& verdict) {
  return Json{{"holds", verdict.holds},
              {"equality", verdict.equality},
              {"criterion", rational_to_json(verdict.criterion)},
              {"lhs", rational_to_json(verdict.lhs)},
              {"rhs", rational_to_json(verdict.rhs)}};
}

Json report_to_json(const SgbGraph& graph, const IndexReport& report) {
  Json degrees = Json::array();
  for (std::size_t id = 0; id < graph.degrees.size(); ++id) {
    degrees.push_back(Json{{"id", id},
                           {"subgroup_order", graph.subgroup_orders.at(id)},
                           {"degree", graph.degrees[id]}});
  }
  const StarDecomposition stars = star_decomposition(graph);
  Json out;
  out["descriptor"] = graph.descriptor.name;
  out["order"] = graph.order;
  out["lattice_size"] = graph.lattice_size;
  out["degrees"] = std::move(degrees);
  out["stars"] = stars.stars;
  out["isolated"] = stars.isolated;
  out["m1"] = big_to_json(report.m1);
  out["m2"] = big_to_json(report.m2);
  out["edge_count"] = big_to_json(report.edge_count);
  out["vertex_count"] = big_to_json(report.vertex_count);
  out["p_value"] = rational_to_json(report.p_value);
  out["hv"] = verdict_to_json(report.hv);
  out["indices"] = Json{{"r", report.radical.r},
                        {"abc", report.radical.abc},
                        {"ga", report.radical.ga},
                        {"h", report.radical.h},
                        {"sci", report.radical.sci}};
  return out;
}

std::string report_to_dot(const SgbGraph& graph) {
  std::ostringstream out;
  out << "graph sgb {\n";
  out << "  label=\"B(" << graph.descriptor.name << "), |G|=" << graph.order
      << ", |L(G)|=" << graph.lattice_size << "\";\n";
  for (std::size_t id = 0; id < graph.degrees.size(); ++id) {
    const auto m = graph.degrees[id];
    out << "  H" << id << " [label=\"H" << id << "(order=" << graph.subgroup_orders.at(id)
        << ", deg=" << m << ")\"];\n";
    if (m == 0) continue;
    out << "  P" << id << " [shape=box, label=\"" << m << (m == 1 ? " pair" : " pairs")
        << "\"];\n";
    out << "  H" << id << " -- P" << id << " [label=\"x" << m << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

GenericGraph parse_generic_graph(std::istream& in) {
  std::ostringstream body;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    body << line << '\n';
  }
  std::istringstream tokens(body.str());
  auto next = [&tokens](const char* what) {
    long long v = 0;
    if (!(tokens >> v) || v < 0) {
      throw Error(ErrorKind::kInvalidInput, std::string("expected a nonnegative ") + what);
    }
    return static_cast<std::uint64_t>(v);
  };
  const std::uint64_t v = next("vertex count");
  const std::uint64_t e = next("edge count");
  GenericGraph g;
  g.degrees.reserve(v);
  for (std::uint64_t i = 0; i < v; ++i) g.degrees.push_back(next("vertex degree"));
  g.edges.reserve(e);
  for (std::uint64_t i = 0; i < e; ++i) {
    const auto du = next("endpoint degree");
    const auto dv = next("endpoint degree");
    g.edges.emplace_back(du, dv);
  }
  std::string extra;
  if (tokens >> extra) throw Error(ErrorKind::kInvalidInput, "trailing data after edge list");
  return g;
}

}  // namespace sgb
