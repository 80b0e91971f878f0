#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "sgb/error.hpp"
#include "sgb/indices.hpp"
#include "sgb/lattice.hpp"

using namespace sgb;

namespace {

using Edges = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

FiniteGroup klein() { return make_direct_product(make_cyclic(2), make_cyclic(2)); }

bool close(double a, double b, double rel = 1e-9) {
  return std::abs(a - b) <= rel * std::max(1.0, std::abs(b));
}

// Expands B(G) into a plain degree sequence and endpoint-degree edge list.
std::pair<std::vector<std::uint64_t>, Edges> expand(const SgbGraph& graph) {
  std::vector<std::uint64_t> degrees(graph.edge_count(), 1);
  Edges edges;
  for (auto m : graph.degrees) {
    degrees.push_back(m);
    for (std::uint64_t i = 0; i < m; ++i) edges.emplace_back(m, 1);
  }
  return {degrees, edges};
}

}  // namespace

TEST_CASE("Zagreb spot values") {
  CHECK(zagreb(build_sgb(make_cyclic(1))) == Zagreb{2, 1});
  CHECK(zagreb(build_sgb(make_cyclic(6))) == Zagreb{686, 650});
  CHECK(zagreb(build_sgb(make_dicyclic(2))) == Zagreb{1082, 1018});
  CHECK(zagreb(build_sgb(make_dicyclic(4))) == Zagreb{13658, 13402});
  CHECK(zagreb(build_sgb(klein())) == Zagreb{80, 64});
}

TEST_CASE("HV verdicts for groups") {
  const auto trivial = check_hv(build_sgb(make_cyclic(1)));
  CHECK(trivial.holds);
  CHECK(trivial.equality);
  CHECK(trivial.criterion == 0);
  CHECK(trivial.lhs == 1);
  CHECK(trivial.rhs == 1);

  const auto z6 = check_hv(build_sgb(make_cyclic(6)));
  CHECK(z6.holds);
  CHECK_FALSE(z6.equality);
  CHECK(z6.criterion == Rational(163, 162));

  const auto q8 = check_hv(build_sgb(make_dicyclic(2)));
  CHECK(q8.holds);
  CHECK(q8.criterion == Rational(2012, 4096));
}

TEST_CASE("generic HV examples") {
  const auto k2 = check_hv_generic(std::vector<std::uint64_t>{1, 1}, Edges{{1, 1}});
  CHECK(k2.holds);
  CHECK(k2.equality);
  CHECK(k2.lhs == 1);
  CHECK(k2.rhs == 1);

  const auto bad = check_hv_generic(std::vector<std::uint64_t>{5, 1, 1, 1, 1, 1, 2, 2, 2},
                                    Edges{{5, 1}, {5, 1}, {5, 1}, {5, 1}, {5, 1},
                                          {2, 2}, {2, 2}, {2, 2}});
  CHECK_FALSE(bad.holds);
  CHECK(bad.lhs == Rational(37, 8));
  CHECK(bad.rhs == Rational(14, 3));
  CHECK(bad.criterion < 0);

  const auto c4 = check_hv_generic(std::vector<std::uint64_t>{2, 2, 2, 2},
                                   Edges{{2, 2}, {2, 2}, {2, 2}, {2, 2}});
  CHECK(c4.holds);
  CHECK(c4.equality);
  CHECK(c4.lhs == 4);

  // Degree sum 3 with one edge: not a graph.
  CHECK_THROWS_AS(check_hv_generic(std::vector<std::uint64_t>{2, 1}, Edges{{2, 1}}), Error);
  // Endpoint degree 3 does not occur.
  CHECK_THROWS_AS(check_hv_generic(std::vector<std::uint64_t>{1, 1}, Edges{{3, 1}}), Error);
}

TEST_CASE("verdict invariants") {
  std::vector<FiniteGroup> groups;
  for (std::size_t n = 1; n <= 16; ++n) {
    groups.push_back(make_cyclic(n));
    groups.push_back(make_dihedral(n));
    groups.push_back(make_dicyclic(n));
  }
  const auto z2 = make_cyclic(2);
  groups.push_back(make_direct_product(make_direct_product(z2, z2), z2));
  for (const auto& g : groups) {
    CAPTURE(g.descriptor().name);
    const auto graph = build_sgb(g);
    const auto v = check_hv(graph);
    CHECK(v.holds == (v.lhs >= v.rhs));
    CHECK(v.holds == (v.criterion >= 0));
    CHECK(v.equality == (v.criterion == 0));
    // The generic check on the expanded graph reaches the same verdict.
    const auto [degrees, edges] = expand(graph);
    const auto generic = check_hv_generic(degrees, edges);
    CHECK(generic.holds == v.holds);
    CHECK(generic.equality == v.equality);
    CHECK(generic.lhs == v.lhs);
    CHECK(generic.rhs == v.rhs);

    const auto report = index_report(graph);
    CHECK(report.m1 == report.m2 + report.edge_count);
    CHECK(report.m2 == numerator(Rational(report.edge_count * report.edge_count) *
                                 report.p_value));
    for (double x : {report.radical.r, report.radical.abc, report.radical.ga, report.radical.h,
                     report.radical.sci}) {
      CHECK(std::isfinite(x));
      CHECK(x >= 0);
    }
  }
}

TEST_CASE("edge-level oracle agrees with the star formulas") {
  std::vector<FiniteGroup> groups;
  for (std::size_t n = 1; n <= 12; ++n) {
    groups.push_back(make_cyclic(n));
    groups.push_back(make_dihedral(n));
    groups.push_back(make_dicyclic(n));
  }
  groups.push_back(klein());
  for (const auto& g : groups) {
    CAPTURE(g.descriptor().name);
    const auto graph = build_sgb(g);
    const auto stars = star_decomposition(graph);
    const auto sums = oracle::edge_sums(oracle::expand_stars(stars.stars, stars.isolated));
    const auto z = zagreb(graph);
    CHECK(z.m1 == sums.m1);
    CHECK(z.m2 == sums.m2);
    const auto r = other_indices(graph);
    CHECK(close(r.r, sums.r));
    CHECK(close(r.abc, sums.abc));
    CHECK(close(r.ga, sums.ga));
    CHECK(close(r.h, sums.h));
    CHECK(close(r.sci, sums.sci));
  }
}

TEST_CASE("radical index spot values") {
  const auto z2 = other_indices(build_sgb(make_cyclic(2)));
  CHECK(close(z2.r, 1 + std::sqrt(3.0)));
  CHECK(close(z2.abc, std::sqrt(6.0)));
  CHECK(close(z2.ga, 1 + 3 * std::sqrt(3.0) / 2));
  CHECK(close(z2.h, 2.5));
  CHECK(close(z2.sci, 1 / std::sqrt(2.0) + 1.5));

  const auto trivial = other_indices(build_sgb(make_cyclic(1)));
  CHECK(close(trivial.r, 1));
  CHECK(close(trivial.abc, 0));
  CHECK(close(trivial.ga, 1));
  CHECK(close(trivial.h, 1));
  CHECK(close(trivial.sci, 1 / std::sqrt(2.0)));

  const auto q8 = other_indices(build_sgb(make_dicyclic(2)));
  CHECK(close(q8.r, 1 + 7 * std::sqrt(3.0) + 2 * std::sqrt(6.0)));
}

TEST_CASE("star formulas") {
  const std::vector<std::uint64_t> stars{1, 3, 8, 24};
  CHECK(zagreb_from_stars(stars) == Zagreb{686, 650});
  const auto v = check_hv_stars(stars, 4);
  CHECK(v.criterion == Rational(163, 162));
  // An isolated vertex adds to |V| but not to the sums.
  CHECK(check_hv_stars(stars, 5).criterion == Rational(5 * 650, 36 * 36) - 1);
  const auto zero = star_indices(std::vector<std::uint64_t>{0, 3});
  const auto three = star_indices(std::vector<std::uint64_t>{3});
  CHECK(zero.r == three.r);
}

TEST_CASE("adding a star increases R, H and SCI") {
  std::vector<std::uint64_t> stars{1};
  auto before = star_indices(stars);
  for (std::uint64_t m : {1, 2, 3, 7, 24, 96, 1000}) {
    stars.push_back(m);
    const auto after = star_indices(stars);
    CHECK(after.r > before.r);
    CHECK(after.h > before.h);
    CHECK(after.sci > before.sci);
    before = after;
  }
}
