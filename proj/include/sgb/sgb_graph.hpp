#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sgb/group.hpp"
#include "sgb/lattice.hpp"

namespace sgb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// The subgroup-generating bipartite graph B(G). Only the L(G) side is stored:
// every pair vertex (a, b) has degree 1, so degrees[H] determines the graph.
struct SgbGraph {
  GroupDescriptor descriptor;
  std::uint64_t order = 0;
  std::size_t lattice_size = 0;
  // Indexed by subgroup id.
  std::vector<std::uint64_t> degrees;
  std::vector<std::uint64_t> subgroup_orders;

  std::uint64_t edge_count() const noexcept { return order * order; }
  // Pair vertices plus every subgroup vertex, including isolated ones.
  std::uint64_t vertex_count() const noexcept { return order * order + lattice_size; }
};

// Components of B(G): one star K_{1,m} per subgroup with m = deg(H) >= 1
// (m = 1 is K_2), plus the count of degree-0 subgroups.
struct StarDecomposition {
  // Sorted ascending.
  std::vector<std::uint64_t> stars;
  std::size_t isolated = 0;

  bool operator==(const StarDecomposition&) const = default;
};

// deg(H) = #{(a, b) in G x G : <a, b> = H}. Rows of the pair space are split
// across `threads` workers; the merged counts do not depend on the split.
SgbGraph build_sgb(const FiniteGroup& g, const SubgroupLattice& lattice, unsigned threads);
SgbGraph build_sgb(const FiniteGroup& g, const SubgroupLattice& lattice);

// deg(H) / |G|^2 in lowest terms.
Rational pr_h(const SgbGraph& graph, std::size_t subgroup_id);

StarDecomposition star_decomposition(const SgbGraph& graph);

// Builds the lattice and the graph in one go.
SgbGraph build_sgb(const FiniteGroup& g);

}  // namespace sgb
