#include <doctest.h>

#include "oracle.hpp"
#include "sgb/closed_forms.hpp"
#include "sgb/error.hpp"
#include "sgb/indices.hpp"

using namespace sgb;

namespace {

using V = std::vector<std::uint64_t>;

// Every admissible spec with p in `primes` (n up to 4 for p^n) whose order is
// at most `cap`.
std::vector<FamilySpec> admissible(std::initializer_list<std::uint64_t> primes, std::uint64_t cap) {
  std::vector<FamilySpec> out;
  for (auto kind : kAllFamilyKinds) {
    for (auto p : primes) {
      for (std::uint64_t n = 1; n <= (kind == FamilyKind::kCyclicPn ? 4 : 1); ++n) {
        FamilySpec spec{kind, p, n};
        try {
          spec.validate();
        } catch (const Error&) {
          continue;
        }
        if (spec.group_order() <= cap) out.push_back(spec);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("family names round trip") {
  for (auto kind : kAllFamilyKinds) CHECK(parse_family_kind(to_string(kind)) == kind);
  CHECK_FALSE(parse_family_kind("cyclic_8p").has_value());
}

TEST_CASE("primality") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("spec validation") {
  auto kind_of = [](const FamilySpec& s) {
    try {
      s.validate();
    } catch (const Error& e) {
      return std::optional<ErrorKind>(e.kind());
    }
    return std::optional<ErrorKind>();
  };
  CHECK(kind_of({FamilyKind::kCyclic2p, 4, 1}) == ErrorKind::kInvalidSpec);
  CHECK(kind_of({FamilyKind::kCyclic2p, 2, 1}) == ErrorKind::kInvalidSpec);
  CHECK(kind_of({FamilyKind::kCyclic4p2, 2, 1}) == ErrorKind::kInvalidSpec);
  CHECK(kind_of({FamilyKind::kCyclicPn, 3, 0}) == ErrorKind::kInvalidSpec);
  CHECK_FALSE(kind_of({FamilyKind::kDicyclic4p, 2, 1}).has_value());
  CHECK_FALSE(kind_of({FamilyKind::kDihedral2p2, 2, 1}).has_value());
  CHECK(FamilySpec{FamilyKind::kCyclicPn, 2, 3}.label() == "cyclic_pn(p=2,n=3)");
  CHECK(FamilySpec{FamilyKind::kDicyclic4p2, 3, 1}.group_order() == 36);
}

TEST_CASE("structure examples") {
  CHECK(structure_formula({FamilyKind::kCyclic2p, 3, 1}).stars == V{1, 3, 8, 24});
  CHECK(structure_formula({FamilyKind::kDicyclic4p, 2, 1}).stars == V{1, 3, 12, 12, 12, 24});
  CHECK(structure_formula({FamilyKind::kDihedral2p, 3, 1}).stars == V{1, 3, 3, 3, 8, 18});
}

TEST_CASE("Zagreb examples") {
  CHECK(zagreb_formula({FamilyKind::kCyclic4p, 3, 1}) == Zagreb{10154, 10010});
  CHECK(zagreb_formula({FamilyKind::kCyclicPn, 2, 2}) == Zagreb{170, 154});
  CHECK(zagreb_formula({FamilyKind::kDihedral2p, 3, 1}) == Zagreb{452, 416});
  CHECK(zagreb_formula({FamilyKind::kDihedral2p, 2, 1}) == Zagreb{80, 64});
  CHECK(zagreb_formula({FamilyKind::kDicyclic4p, 2, 1}) == Zagreb{1082, 1018});
  CHECK(zagreb_formula({FamilyKind::kDicyclic4p2, 2, 1}) == Zagreb{13658, 13402});
}

TEST_CASE("formula consistency") {
  for (const auto& spec : admissible({2, 3, 5, 7, 11}, 1u << 20)) {
    CAPTURE(spec.label());
    const auto s = structure_formula(spec);
    const auto order = spec.group_order();
    BigInt sum = 0;
    for (auto m : s.stars) sum += m;
    CHECK(sum == BigInt(order) * order);
    CHECK(std::is_sorted(s.stars.begin(), s.stars.end()));
    const auto z = zagreb_formula(spec);
    CHECK(z.m1 - z.m2 == BigInt(order) * order);
    CHECK(zagreb_from_stars(s.stars) == z);
  }
}

TEST_CASE("closed-form structures match brute force") {
  for (const auto& spec : admissible({2, 3, 5, 7}, 512)) {
    if (spec.family == FamilyKind::kDicyclic4p2 && spec.p > 2) continue;
    CAPTURE(spec.label());
    const auto r = verify_family(spec);
    CHECK(r.structure_match);
    CHECK(r.m1_match);
    CHECK(r.m2_match);
    CHECK(r.hv_match);
    CHECK(r.indices_match);
    CHECK(r.brute.hv.holds);
    CHECK(r.brute.hv.criterion > 0);
  }
}

TEST_CASE("brute-force side of verify_family equals the pair oracle") {
  for (const FamilySpec spec : {FamilySpec{FamilyKind::kDihedral2p, 2, 1},
                                FamilySpec{FamilyKind::kCyclic2p, 3, 1},
                                FamilySpec{FamilyKind::kDicyclic4p2, 3, 1}}) {
    CAPTURE(spec.label());
    const auto r = verify_family(spec);
    CHECK(r.brute.stars.stars == oracle::pair_degree_multiset(spec.build_group()));
  }
}

TEST_CASE("closed-form Q4p^2 structure differs from brute force for odd p") {
  // Observed components for Q_{4p^2}, p odd:
  // 1, 3, 12 (p^2 times), p^2-1, 3p^2-3, p^4-p^2, 3p^4-3p^2,
  // 12p^2-12p (p times), 12p^4-12p^3.
  for (std::uint64_t p : {3, 5}) {
    CAPTURE(p);
    const FamilySpec spec{FamilyKind::kDicyclic4p2, p, 1};
    const auto r = verify_family(spec);
    const std::uint64_t p2 = p * p, p4 = p2 * p2;
    V observed{1, 3, p2 - 1, 3 * p2 - 3, p4 - p2, 3 * p4 - 3 * p2, 12 * p4 - 12 * p4 / p};
    observed.insert(observed.end(), p2, 12);
    observed.insert(observed.end(), p, 12 * p2 - 12 * p);
    std::sort(observed.begin(), observed.end());
    CHECK(r.brute.stars.stars == observed);
    CHECK_FALSE(r.structure_match);
    CHECK_FALSE(r.m1_match);
    CHECK(r.brute.hv.holds);
  }
  const auto r3 = verify_family({FamilyKind::kDicyclic4p2, 3, 1});
  CHECK(r3.brute.zagreb == Zagreb{490538, 489242});
  CHECK(r3.formula.zagreb == Zagreb{687530, 686234});
}

TEST_CASE("order cap") {
  try {
    verify_family({FamilyKind::kCyclicPn, 2, 10}, 512, 1);
    FAIL("expected resource-limit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kResourceLimit);
  }
}
