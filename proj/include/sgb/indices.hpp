#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "sgb/sgb_graph.hpp"

namespace sgb {

struct Zagreb {
  BigInt m1;
  BigInt m2;

  bool operator==(const Zagreb&) const = default;
};

// Outcome of comparing M2/|E| against M1/|V|.
//
// For B(G), `criterion` is |L(G)| P - 1 with P = sum_H Pr_H(G)^2, which has the
// same sign as M2/|E| - M1/|V|. For an arbitrary graph it is the integer
// M2 |V| - M1 |E|.
struct HvVerdict {
  bool holds = false;
  bool equality = false;
  Rational lhs;
  Rational rhs;
  Rational criterion;
};

// Randic, atom-bond connectivity, geometric-arithmetic, harmonic and
// sum-connectivity indices.
struct RadicalIndices {
  double r = 0;
  double abc = 0;
  double ga = 0;
  double h = 0;
  double sci = 0;
};

struct IndexReport {
  BigInt m1;
  BigInt m2;
  BigInt edge_count;
  BigInt vertex_count;
  Rational p_value;
  HvVerdict hv;
  RadicalIndices radical;
};

Zagreb zagreb(const SgbGraph& graph);

// M1 = |E| + sum m^2 and M2 = sum m^2 for a union of stars K_{1,m} with |E|
// pair leaves in total.
Zagreb zagreb_from_stars(std::span<const std::uint64_t> stars);

// Exact verdict for B(G). Compares M2 |V| with M1 |E| and, independently, the
// sign of |L(G)| P - 1. Throws kInternalInconsistency if the two disagree.
HvVerdict check_hv(const SgbGraph& graph);

// Same check on a star union: `lattice_size` counts every subgroup vertex,
// including isolated ones that have no star.
HvVerdict check_hv_stars(std::span<const std::uint64_t> stars, std::size_t lattice_size);

// Verdict for an arbitrary simple graph given its degree sequence and, for each
// edge, the degrees of its endpoints. Throws kInvalidInput on a handshake
// violation or an endpoint degree that matches no vertex.
HvVerdict check_hv_generic(std::span<const std::uint64_t> vertex_degrees,
                           std::span<const std::pair<std::uint64_t, std::uint64_t>> edges);

RadicalIndices other_indices(const SgbGraph& graph);

// Star specialisation of the five indices: each K_{1,m} contributes
// sqrt(m), sqrt(m^2 - m), 2 m^{3/2} / (1 + m), 2m / (1 + m) and m / sqrt(1 + m).
// Terms are summed in the given order.
RadicalIndices star_indices(std::span<const std::uint64_t> stars);

IndexReport index_report(const SgbGraph& graph);

}  // namespace sgb
