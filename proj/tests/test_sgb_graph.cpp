#include <doctest.h>

#include "oracle.hpp"
#include "sgb/error.hpp"
#include "sgb/lattice.hpp"
#include "sgb/sgb_graph.hpp"

using namespace sgb;

namespace {

std::vector<std::uint64_t> sorted_degrees(const SgbGraph& graph) {
  auto d = graph.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

FiniteGroup klein() { return make_direct_product(make_cyclic(2), make_cyclic(2)); }

}  // namespace

TEST_CASE("degree multisets") {
  using V = std::vector<std::uint64_t>;
  CHECK(build_sgb(make_cyclic(1)).degrees == V{1});
  CHECK(sorted_degrees(build_sgb(make_cyclic(6))) == V{1, 3, 8, 24});
  CHECK(sorted_degrees(build_sgb(klein())) == V{1, 3, 3, 3, 6});
  CHECK(sorted_degrees(build_sgb(make_dicyclic(2))) == V{1, 3, 12, 12, 12, 24});
}

TEST_CASE("star decompositions") {
  using V = std::vector<std::uint64_t>;
  CHECK(star_decomposition(build_sgb(make_cyclic(4))) == StarDecomposition{V{1, 3, 12}, 0});
  CHECK(star_decomposition(build_sgb(make_cyclic(12))) ==
        StarDecomposition{V{1, 3, 8, 12, 24, 96}, 0});
  CHECK(star_decomposition(build_sgb(klein())) == StarDecomposition{V{1, 3, 3, 3, 6}, 0});
}

TEST_CASE("isolated subgroups") {
  // Z2^3 is not 2-generated, so the whole group has degree 0.
  const auto z2 = make_cyclic(2);
  const auto g = make_direct_product(make_direct_product(z2, z2), z2);
  const auto graph = build_sgb(g);
  const auto lattice = all_subgroups(g);
  CHECK(graph.degrees[lattice.whole_id()] == 0);
  const auto stars = star_decomposition(graph);
  CHECK(stars.isolated == 1);
  CHECK(stars.stars.size() + stars.isolated == graph.lattice_size);
  CHECK(graph.vertex_count() == 64 + graph.lattice_size);
}

TEST_CASE("pair probabilities") {
  const auto z6 = make_cyclic(6);
  const auto lattice = all_subgroups(z6);
  const auto graph = build_sgb(z6, lattice);
  CHECK(pr_h(graph, lattice.lookup(std::vector<Element>{0, 3})) == Rational(1, 12));
  CHECK(pr_h(graph, lattice.trivial_id()) == Rational(1, 36));
  CHECK(pr_h(graph, lattice.whole_id()) == Rational(2, 3));
  try {
    pr_h(graph, 99);
    FAIL("expected not-found");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotFound);
  }
}

TEST_CASE("degrees agree with the pair-enumeration oracle") {
  std::vector<FiniteGroup> groups;
  for (std::size_t n = 1; n <= 12; ++n) {
    groups.push_back(make_cyclic(n));
    groups.push_back(make_dihedral(n));
  }
  for (std::size_t n = 1; n <= 4; ++n) groups.push_back(make_dicyclic(n));
  groups.push_back(klein());
  groups.push_back(make_direct_product(make_cyclic(3), make_cyclic(3)));
  for (const auto& g : groups) {
    CAPTURE(g.descriptor().name);
    const auto lattice = all_subgroups(g);
    const auto graph = build_sgb(g, lattice);
    const auto expected = oracle::pair_degrees(g);
    for (const auto& h : lattice.subgroups()) {
      const oracle::ElementSet key(h.elements.begin(), h.elements.end());
      const auto it = expected.find(key);
      CHECK(graph.degrees[h.id] == (it == expected.end() ? 0 : it->second));
    }
  }
}

TEST_CASE("graph invariants") {
  for (std::size_t n = 1; n <= 40; ++n) {
    for (const auto& g : {make_cyclic(n), make_dihedral(n), make_dicyclic(n)}) {
      CAPTURE(g.descriptor().name);
      const auto lattice = all_subgroups(g);
      const auto graph = build_sgb(g, lattice);
      std::uint64_t sum = 0;
      for (auto d : graph.degrees) sum += d;
      CHECK(sum == g.order() * g.order());
      CHECK(graph.degrees[lattice.trivial_id()] == 1);
      CHECK(graph.edge_count() == g.order() * g.order());
      for (Element x = 0; x < g.order(); ++x) {
        const auto cyc = generated_subgroup(g, std::vector<Element>{x});
        CHECK(graph.degrees[lattice.lookup(cyc.elements)] >= 1);
      }
      const auto stars = star_decomposition(graph);
      std::uint64_t star_sum = 0;
      for (auto m : stars.stars) star_sum += m;
      CHECK(star_sum == graph.edge_count());
      CHECK(stars.stars.size() + stars.isolated == graph.lattice_size);
    }
  }
}

TEST_CASE("parallel and sequential builds agree") {
  for (const auto& g : {make_dihedral(30), make_dicyclic(12), make_cyclic(64),
                        make_direct_product(make_dihedral(4), make_cyclic(6))}) {
    const auto lattice = all_subgroups(g);
    const auto seq = build_sgb(g, lattice, 1);
    for (unsigned t : {2u, 3u, 7u, 16u}) CHECK(build_sgb(g, lattice, t).degrees == seq.degrees);
  }
}

TEST_CASE("lattice from a different group is rejected") {
  const auto lattice = all_subgroups(make_cyclic(6));
  try {
    build_sgb(make_dihedral(3), lattice);
    FAIL("expected invalid-input");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInvalidInput);
  }
}
