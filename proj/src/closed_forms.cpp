#include "sgb/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sgb/config.hpp"
#include "sgb/error.hpp"

namespace sgb {
namespace {

BigInt pw(std::uint64_t p, unsigned k) {
  BigInt out = 1;
  for (unsigned i = 0; i < k; ++i) out *= p;
  return out;
}

std::uint64_t to_u64(const BigInt& v, const FamilySpec& spec) {
  if (v < 1 || v > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    throw Error(ErrorKind::kInvalidSpec,
                "star size " + v.str() + " out of range for " + spec.label());
  }
  return static_cast<std::uint64_t>(v);
}

class StarList {
 public:
  explicit StarList(const FamilySpec& spec) : spec_(spec) {}

  StarList& add(const BigInt& size, std::uint64_t copies = 1) {
    const std::uint64_t m = to_u64(size, spec_);
    stars_.insert(stars_.end(), copies, m);
    return *this;
  }

  StarDecomposition finish() {
    std::sort(stars_.begin(), stars_.end());
    return StarDecomposition{std::move(stars_), 0};
  }

 private:
  const FamilySpec& spec_;
  std::vector<std::uint64_t> stars_;
};

bool close_rel(double a, double b, double rel) {
  if (a == b) return true;
  return std::fabs(a - b) <= rel * std::max(std::fabs(a), std::fabs(b));
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kCyclic2p: return "cyclic_2p";
    case FamilyKind::kCyclic2p2: return "cyclic_2p2";
    case FamilyKind::kCyclic4p: return "cyclic_4p";
    case FamilyKind::kCyclic4p2: return "cyclic_4p2";
    case FamilyKind::kCyclicPn: return "cyclic_pn";
    case FamilyKind::kDihedral2p: return "dihedral_2p";
    case FamilyKind::kDihedral2p2: return "dihedral_2p2";
    case FamilyKind::kDicyclic4p: return "dicyclic_4p";
    case FamilyKind::kDicyclic4p2: return "dicyclic_4p2";
  }
  return "unknown";
}

std::optional<FamilyKind> parse_family_kind(std::string_view name) {
  for (FamilyKind kind : kAllFamilyKinds) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void FamilySpec::validate() const {
  if (!is_prime(p)) {
    throw Error(ErrorKind::kInvalidSpec, std::string(to_string(family)) + ": p = " +
                                             std::to_string(p) + " is not prime");
  }
  switch (family) {
    case FamilyKind::kCyclic2p:
    case FamilyKind::kCyclic2p2:
    case FamilyKind::kCyclic4p:
    case FamilyKind::kCyclic4p2:
      if (p == 2) {
        throw Error(ErrorKind::kInvalidSpec,
                    std::string(to_string(family)) + " needs an odd prime; use cyclic_pn for p = 2");
      }
      break;
    case FamilyKind::kCyclicPn:
      if (n == 0) throw Error(ErrorKind::kInvalidSpec, "cyclic_pn needs n >= 1");
      if (n > 62) throw Error(ErrorKind::kInvalidSpec, "cyclic_pn exponent too large");
      break;
    default:
      break;
  }
}

std::uint64_t FamilySpec::group_order() const {
  validate();
  const auto p2 = p * p;
  switch (family) {
    case FamilyKind::kCyclic2p: return 2 * p;
    case FamilyKind::kCyclic2p2: return 2 * p2;
    case FamilyKind::kCyclic4p: return 4 * p;
    case FamilyKind::kCyclic4p2: return 4 * p2;
    case FamilyKind::kCyclicPn: {
      BigInt order = pw(p, static_cast<unsigned>(n));
      if (order > BigInt(std::numeric_limits<std::uint64_t>::max())) {
        throw Error(ErrorKind::kResourceLimit, label() + " order overflows");
      }
      return static_cast<std::uint64_t>(order);
    }
    case FamilyKind::kDihedral2p: return 2 * p;
    case FamilyKind::kDihedral2p2: return 2 * p2;
    case FamilyKind::kDicyclic4p: return 4 * p;
    case FamilyKind::kDicyclic4p2: return 4 * p2;
  }
  return 0;
}

FiniteGroup FamilySpec::build_group() const {
  const std::uint64_t order = group_order();
  if (order > kMaxTableOrder) {
    throw Error(ErrorKind::kResourceLimit, label() + " has order " + std::to_string(order));
  }
  switch (family) {
    case FamilyKind::kCyclic2p:
    case FamilyKind::kCyclic2p2:
    case FamilyKind::kCyclic4p:
    case FamilyKind::kCyclic4p2:
    case FamilyKind::kCyclicPn: return make_cyclic(order);
    case FamilyKind::kDihedral2p:
    case FamilyKind::kDihedral2p2: return make_dihedral(order / 2);
    case FamilyKind::kDicyclic4p:
    case FamilyKind::kDicyclic4p2: return make_dicyclic(order / 4);
  }
  throw Error(ErrorKind::kInvalidSpec, "unknown family");
}

std::string FamilySpec::label() const {
  std::string out = std::string(to_string(family)) + "(p=" + std::to_string(p);
  if (family == FamilyKind::kCyclicPn) out += ",n=" + std::to_string(n);
  return out + ")";
}

StarDecomposition structure_formula(const FamilySpec& spec) {
  spec.validate();
  const std::uint64_t p = spec.p;
  const BigInt p2 = pw(p, 2), p3 = pw(p, 3), p4 = pw(p, 4);
  StarList s(spec);
  switch (spec.family) {
    case FamilyKind::kCyclic2p:
      s.add(1).add(3).add(p2 - 1).add(3 * p2 - 3);
      break;
    case FamilyKind::kCyclic2p2:
      s.add(1).add(3).add(p2 - 1).add(3 * p2 - 3).add(p4 - p2).add(3 * p4 - 3 * p2);
      break;
    case FamilyKind::kCyclic4p:
      s.add(1).add(3).add(12).add(p2 - 1).add(3 * p2 - 3).add(12 * p2 - 12);
      break;
    case FamilyKind::kCyclic4p2:
      s.add(1).add(3).add(12).add(p2 - 1).add(p4 - p2).add(3 * p2 - 3).add(3 * p4 - 3 * p2)
          .add(12 * p2 - 12).add(12 * p4 - 12 * p2);
      break;
    case FamilyKind::kCyclicPn:
      // K_2 plus K_{1, p^{2k-2}(p^2-1)} for k = 1..n.
      s.add(1);
      for (unsigned k = 1; k <= spec.n; ++k) s.add(pw(p, 2 * k - 2) * (p2 - 1));
      break;
    case FamilyKind::kDihedral2p:
      s.add(1).add(3, p).add(p2 - 1).add(3 * p * (p - 1));
      break;
    case FamilyKind::kDihedral2p2:
      s.add(1).add(3, p * p).add(p2 - 1).add(p4 - p2).add(3 * p * (p - 1), p)
          .add(3 * p2 * (p2 - p));
      break;
    case FamilyKind::kDicyclic4p:
      if (p == 2) {
        s.add(1).add(3).add(12, 3).add(24);
      } else {
        s.add(1).add(3).add(12, p).add(p2 - 1).add(3 * p2 - 3).add(12 * p2 - 12 * p);
      }
      break;
    case FamilyKind::kDicyclic4p2:
      if (p == 2) {
        s.add(1).add(3).add(12, 5).add(24, 2).add(48).add(96);
      } else {
        s.add(1).add(3).add(12, p * p).add(p2 - 1).add(3 * p2 - 3).add(3 * p4 - 3 * p2)
            .add(12 * p2 - 12 * p, p - 1).add(13 * p4 - 12 * p3 + 11 * p2 - 12 * p);
      }
      break;
  }
  return s.finish();
}

Zagreb zagreb_formula(const FamilySpec& spec) {
  spec.validate();
  const std::uint64_t p = spec.p;
  auto P = [p](unsigned k) { return pw(p, k); };
  Zagreb z;
  switch (spec.family) {
    case FamilyKind::kCyclic2p:
      z.m1 = 10 * P(4) - 16 * P(2) + 20;
      z.m2 = 10 * P(4) - 20 * P(2) + 20;
      break;
    case FamilyKind::kCyclic2p2:
      z.m1 = 10 * P(8) - 20 * P(6) + 24 * P(4) - 20 * P(2) + 20;
      z.m2 = 10 * P(8) - 20 * P(6) + 20 * P(4) - 20 * P(2) + 20;
      break;
    case FamilyKind::kCyclic4p:
      z.m1 = 154 * P(4) - 292 * P(2) + 308;
      z.m2 = 154 * P(4) - 308 * P(2) + 308;
      break;
    case FamilyKind::kCyclic4p2:
      z.m1 = 154 * P(8) - 308 * P(6) + 324 * P(4) - 308 * P(2) + 308;
      z.m2 = 154 * P(8) - 308 * P(6) + 308 * P(4) - 308 * P(2) + 308;
      break;
    case FamilyKind::kCyclicPn: {
      const unsigned n = static_cast<unsigned>(spec.n);
      const BigInt den = P(2) + 1;
      const BigInt num1 = P(2 * n) * (P(2) + 1) + P(4 * n) * (P(2) - 1) + 2;
      const BigInt num2 = P(4 * n) * (P(2) - 1) + 2;
      if (num1 % den != 0 || num2 % den != 0) {
        throw Error(ErrorKind::kNonIntegralResult,
                    spec.label() + ": Zagreb expression does not divide exactly");
      }
      z.m1 = num1 / den;
      z.m2 = num2 / den;
      break;
    }
    case FamilyKind::kDihedral2p:
      z.m1 = 10 * P(4) - 18 * P(3) + 11 * P(2) + 9 * P(1) + 2;
      z.m2 = 10 * P(4) - 18 * P(3) + 7 * P(2) + 9 * P(1) + 2;
      break;
    case FamilyKind::kDihedral2p2:
      z.m1 = 10 * P(8) - 18 * P(7) + 7 * P(6) + 9 * P(5) - 12 * P(4) + 9 * P(3) + 7 * P(2) + 2;
      z.m2 = 10 * P(8) - 18 * P(7) + 7 * P(6) + 9 * P(5) - 16 * P(4) + 9 * P(3) + 7 * P(2) + 2;
      break;
    case FamilyKind::kDicyclic4p:
      if (p == 2) {
        z.m1 = 1082;
        z.m2 = 1018;
      } else {
        z.m1 = 154 * P(4) - 288 * P(3) + 140 * P(2) + 144 * P(1) + 20;
        z.m2 = 154 * P(4) - 288 * P(3) + 124 * P(2) + 144 * P(1) + 20;
      }
      break;
    case FamilyKind::kDicyclic4p2:
      if (p == 2) {
        z.m1 = 13658;
        z.m2 = 13402;
      } else {
        z.m1 = 178 * P(8) - 312 * P(7) + 412 * P(6) - 432 * P(5) + 12 * P(4) + 168 * P(3) +
               124 * P(2) + 20;
        z.m2 = 178 * P(8) - 312 * P(7) + 412 * P(6) - 432 * P(5) - 4 * P(4) + 168 * P(3) +
               124 * P(2) + 20;
      }
      break;
  }
  return z;
}

VerificationReport verify_family(const FamilySpec& spec, std::size_t max_order, unsigned threads) {
  spec.validate();
  if (spec.group_order() > max_order) {
    throw Error(ErrorKind::kResourceLimit, spec.label() + " has order " +
                                               std::to_string(spec.group_order()) +
                                               ", above the cap of " + std::to_string(max_order));
  }
  const FiniteGroup g = spec.build_group();
  const SubgroupLattice lattice = all_subgroups(g, max_order);
  const SgbGraph graph = build_sgb(g, lattice, threads);

  VerificationReport report;
  report.spec = spec;
  report.brute.stars = star_decomposition(graph);
  report.brute.zagreb = zagreb(graph);
  report.brute.hv = check_hv(graph);
  report.brute.radical = other_indices(graph);

  report.formula.stars = structure_formula(spec);
  report.formula.zagreb = zagreb_formula(spec);
  report.formula.hv = check_hv_stars(report.formula.stars.stars,
                                     report.formula.stars.stars.size());
  report.formula.radical = star_indices(report.formula.stars.stars);

  report.structure_match = report.brute.stars == report.formula.stars;
  report.m1_match = report.brute.zagreb.m1 == report.formula.zagreb.m1;
  report.m2_match = report.brute.zagreb.m2 == report.formula.zagreb.m2;
  report.hv_match = report.brute.hv.holds == report.formula.hv.holds;

  // Brute-force sums run in lattice order, formula sums in ascending star order.
  const RadicalIndices& a = report.brute.radical;
  const RadicalIndices& b = report.formula.radical;
  constexpr double kRel = 1e-12;
  report.indices_match = close_rel(a.r, b.r, kRel) && close_rel(a.abc, b.abc, kRel) &&
                         close_rel(a.ga, b.ga, kRel) && close_rel(a.h, b.h, kRel) &&
                         close_rel(a.sci, b.sci, kRel);
  return report;
}

VerificationReport verify_family(const FamilySpec& spec) {
  return verify_family(spec, max_order(), worker_threads());
}

}  // namespace sgb
