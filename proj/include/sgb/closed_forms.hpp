#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgb/group.hpp"
#include "sgb/indices.hpp"
#include "sgb/sgb_graph.hpp"

namespace sgb {

enum class FamilyKind {
  kCyclic2p,
  kCyclic2p2,
  kCyclic4p,
  kCyclic4p2,
  kCyclicPn,
  kDihedral2p,
  kDihedral2p2,
  kDicyclic4p,
  kDicyclic4p2,
};

inline constexpr FamilyKind kAllFamilyKinds[] = {
    FamilyKind::kCyclic2p,    FamilyKind::kCyclic2p2,   FamilyKind::kCyclic4p,
    FamilyKind::kCyclic4p2,   FamilyKind::kCyclicPn,    FamilyKind::kDihedral2p,
    FamilyKind::kDihedral2p2, FamilyKind::kDicyclic4p,  FamilyKind::kDicyclic4p2,
};

// "cyclic_2p", "cyclic_2p2", ..., "dicyclic_4p2".
std::string_view to_string(FamilyKind kind);
std::optional<FamilyKind> parse_family_kind(std::string_view name);

// Deterministic trial division.
bool is_prime(std::uint64_t p);

// A group family with a closed-form B(G) and its parameters. `n` is only used
// by kCyclicPn (|G| = p^n).
struct FamilySpec {
  FamilyKind family = FamilyKind::kCyclic2p;
  std::uint64_t p = 2;
  std::uint64_t n = 1;

  // Throws kInvalidSpec for a non-prime p, p = 2 in an odd-prime-only cyclic
  // family, or n = 0.
  void validate() const;

  std::uint64_t group_order() const;
  FiniteGroup build_group() const;
  // e.g. "cyclic_pn(p=2,n=3)".
  std::string label() const;
};

// The closed-form star multiset of B(G), sorted ascending.
StarDecomposition structure_formula(const FamilySpec& spec);

// The closed-form Zagreb polynomials evaluated exactly.
Zagreb zagreb_formula(const FamilySpec& spec);

struct FamilyObservation {
  StarDecomposition stars;
  Zagreb zagreb;
  HvVerdict hv;
  RadicalIndices radical;
};

struct VerificationReport {
  FamilySpec spec;
  bool structure_match = false;
  bool m1_match = false;
  bool m2_match = false;
  bool hv_match = false;
  // Radical indices over the brute-force degrees against the formula stars,
  // relative 1e-12.
  bool indices_match = false;
  FamilyObservation brute;
  FamilyObservation formula;

  bool all_match() const noexcept {
    return structure_match && m1_match && m2_match && hv_match && indices_match;
  }
};

// Builds the group, computes B(G) by brute force and compares it with the
// closed forms. Throws kResourceLimit when |G| exceeds `max_order`.
VerificationReport verify_family(const FamilySpec& spec, std::size_t max_order, unsigned threads);
VerificationReport verify_family(const FamilySpec& spec);

}  // namespace sgb
