#include "sgb/indices.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sgb/error.hpp"

namespace sgb {
namespace {

BigInt sum_of_squares(std::span<const std::uint64_t> values) {
  BigInt total = 0;
  for (auto v : values) total += BigInt(v) * v;
  return total;
}

BigInt sum_of(std::span<const std::uint64_t> values) {
  BigInt total = 0;
  for (auto v : values) total += v;
  return total;
}

// Fills holds/equality from M2 |V| - M1 |E| and records both ratios.
HvVerdict compare_ratios(const BigInt& m1, const BigInt& m2, const BigInt& edges,
                         const BigInt& vertices) {
  HvVerdict v;
  v.lhs = Rational(m2, edges);
  v.rhs = Rational(m1, vertices);
  const BigInt diff = m2 * vertices - m1 * edges;
  v.holds = diff >= 0;
  v.equality = diff == 0;
  v.criterion = Rational(diff);
  return v;
}

}  // namespace

Zagreb zagreb_from_stars(std::span<const std::uint64_t> stars) {
  Zagreb z;
  z.m2 = sum_of_squares(stars);
  z.m1 = z.m2 + sum_of(stars);
  return z;
}

Zagreb zagreb(const SgbGraph& graph) {
  Zagreb z;
  z.m2 = sum_of_squares(graph.degrees);
  z.m1 = z.m2 + graph.edge_count();
  return z;
}

HvVerdict check_hv_stars(std::span<const std::uint64_t> stars, std::size_t lattice_size) {
  const BigInt edges = sum_of(stars);
  if (edges == 0) throw Error(ErrorKind::kInvalidInput, "star union has no edges");
  const Zagreb z = zagreb_from_stars(stars);
  const BigInt vertices = edges + lattice_size;

  HvVerdict v = compare_ratios(z.m1, z.m2, edges, vertices);

  // |L(G)| P - 1 with P = M2 / |E|^2.
  const Rational p_value(z.m2, edges * edges);
  const Rational criterion = Rational(BigInt(lattice_size)) * p_value - 1;
  const bool holds = criterion >= 0;
  const bool equality = criterion == 0;
  if (holds != v.holds || equality != v.equality) {
    throw Error(ErrorKind::kInternalInconsistency,
                "M2/|E| >= M1/|V| disagrees with |L(G)|P - 1 >= 0 (criterion " +
                    criterion.str() + ")");
  }
  v.criterion = criterion;
  return v;
}

HvVerdict check_hv(const SgbGraph& graph) {
  return check_hv_stars(graph.degrees, graph.lattice_size);
}

HvVerdict check_hv_generic(std::span<const std::uint64_t> vertex_degrees,
                           std::span<const std::pair<std::uint64_t, std::uint64_t>> edges) {
  if (vertex_degrees.empty() || edges.empty()) {
    throw Error(ErrorKind::kInvalidInput, "graph needs at least one vertex and one edge");
  }
  const BigInt degree_sum = sum_of(vertex_degrees);
  if (degree_sum != BigInt(2) * edges.size()) {
    throw Error(ErrorKind::kInvalidInput, "degree sum " + degree_sum.str() +
                                              " != 2|E| = " + std::to_string(2 * edges.size()));
  }
  const std::set<std::uint64_t> present(vertex_degrees.begin(), vertex_degrees.end());
  BigInt m2 = 0;
  for (const auto& [du, dv] : edges) {
    if (du == 0 || dv == 0 || !present.contains(du) || !present.contains(dv)) {
      throw Error(ErrorKind::kInvalidInput, "edge endpoint degrees (" + std::to_string(du) +
                                                ", " + std::to_string(dv) +
                                                ") match no vertex");
    }
    m2 += BigInt(du) * dv;
  }
  const BigInt m1 = sum_of_squares(vertex_degrees);
  return compare_ratios(m1, m2, BigInt(edges.size()), BigInt(vertex_degrees.size()));
}

RadicalIndices star_indices(std::span<const std::uint64_t> stars) {
  RadicalIndices out;
  for (auto m : stars) {
    if (m == 0) continue;
    const double d = static_cast<double>(m);
    out.r += std::sqrt(d);
    out.abc += std::sqrt(d * d - d);
    out.ga += 2.0 * d * std::sqrt(d) / (1.0 + d);
    out.h += 2.0 * d / (1.0 + d);
    out.sci += d / std::sqrt(1.0 + d);
  }
  return out;
}

RadicalIndices other_indices(const SgbGraph& graph) { return star_indices(graph.degrees); }

IndexReport index_report(const SgbGraph& graph) {
  IndexReport report;
  const Zagreb z = zagreb(graph);
  report.m1 = z.m1;
  report.m2 = z.m2;
  report.edge_count = graph.edge_count();
  report.vertex_count = graph.vertex_count();
  report.p_value = Rational(z.m2, report.edge_count * report.edge_count);
  report.hv = check_hv(graph);
  report.radical = other_indices(graph);
  return report;
}

}  // namespace sgb
