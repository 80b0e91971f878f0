#include "sgb/sgb_graph.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "sgb/config.hpp"
#include "sgb/error.hpp"

namespace sgb {
namespace {

// Per-element cyclic subgroups, with a membership bitmap for each distinct one.
struct CyclicCache {
  std::vector<std::size_t> id_of;                 // element -> lattice id of <x>
  std::vector<std::int64_t> slot_of;              // lattice id -> bitmap slot, or -1
  std::vector<std::vector<std::uint8_t>> member;  // slot -> bitmap over G

  bool contains(std::size_t id, Element y) const { return member[slot_of[id]][y] != 0; }
};

CyclicCache cache_cyclic(const FiniteGroup& g, const SubgroupLattice& lattice) {
  const std::size_t n = g.order();
  CyclicCache cache;
  cache.id_of.resize(n);
  cache.slot_of.assign(lattice.size(), -1);
  SubgroupCloser closer(g);
  for (Element x = 0; x < n; ++x) {
    const Element gen[] = {x};
    const std::size_t id = lattice.lookup(closer.close({}, gen));
    cache.id_of[x] = id;
    if (cache.slot_of[id] < 0) {
      cache.slot_of[id] = static_cast<std::int64_t>(cache.member.size());
      std::vector<std::uint8_t> bits(n, 0);
      for (Element y : lattice[id].elements) bits[y] = 1;
      cache.member.push_back(std::move(bits));
    }
  }
  return cache;
}

// Counts the pairs (a, b) with a in this worker's rows and b >= a. Off-diagonal
// pairs count twice since <a, b> = <b, a>.
void count_rows(const FiniteGroup& g, const SubgroupLattice& lattice, const CyclicCache& cache,
                unsigned worker, unsigned workers, std::vector<std::uint64_t>& counts) {
  const std::size_t n = g.order();
  SubgroupCloser closer(g);
  for (Element a = worker; a < n; a += workers) {
    const std::size_t ca = cache.id_of[a];
    counts[ca] += 1;
    for (Element b = a + 1; b < n; ++b) {
      std::size_t id;
      if (cache.contains(ca, b)) {
        id = ca;
      } else if (cache.contains(cache.id_of[b], a)) {
        id = cache.id_of[b];
      } else {
        const Element gens[] = {a, b};
        id = lattice.lookup(closer.close(lattice[ca].elements, gens));
      }
      counts[id] += 2;
    }
  }
}

}  // namespace

SgbGraph build_sgb(const FiniteGroup& g, const SubgroupLattice& lattice, unsigned threads) {
  const std::size_t n = g.order();
  if (lattice.parent_order() != n || lattice.parent_name() != g.descriptor().name) {
    throw Error(ErrorKind::kInvalidInput, "lattice of " + lattice.parent_name() +
                                              " does not belong to " + g.descriptor().name);
  }
  const CyclicCache cache = cache_cyclic(g, lattice);

  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::size_t>(threads == 0 ? 1 : threads, 1, n));
  std::vector<std::vector<std::uint64_t>> partial(workers,
                                                  std::vector<std::uint64_t>(lattice.size(), 0));
  if (workers == 1) {
    count_rows(g, lattice, cache, 0, 1, partial[0]);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            count_rows(g, lattice, cache, w, workers, partial[w]);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  SgbGraph graph;
  graph.descriptor = g.descriptor();
  graph.order = n;
  graph.lattice_size = lattice.size();
  graph.degrees.assign(lattice.size(), 0);
  for (const auto& counts : partial) {
    for (std::size_t id = 0; id < counts.size(); ++id) {
      if (__builtin_add_overflow(graph.degrees[id], counts[id], &graph.degrees[id])) {
        throw Error(ErrorKind::kInternalInconsistency, "degree count overflow");
      }
    }
  }
  graph.subgroup_orders.reserve(lattice.size());
  for (const auto& h : lattice.subgroups()) graph.subgroup_orders.push_back(h.order());

  std::uint64_t total = 0;
  for (auto d : graph.degrees) total += d;
  if (total != graph.edge_count() || graph.degrees[lattice.trivial_id()] != 1) {
    throw Error(ErrorKind::kInternalInconsistency,
                "degree sum " + std::to_string(total) + " != |G|^2 = " +
                    std::to_string(graph.edge_count()) + " for " + g.descriptor().name);
  }
  return graph;
}

SgbGraph build_sgb(const FiniteGroup& g, const SubgroupLattice& lattice) {
  return build_sgb(g, lattice, worker_threads());
}

SgbGraph build_sgb(const FiniteGroup& g) { return build_sgb(g, all_subgroups(g)); }

Rational pr_h(const SgbGraph& graph, std::size_t subgroup_id) {
  if (subgroup_id >= graph.degrees.size()) {
    throw Error(ErrorKind::kNotFound, "subgroup id " + std::to_string(subgroup_id) +
                                          " not in a lattice of size " +
                                          std::to_string(graph.degrees.size()));
  }
  return Rational(BigInt(graph.degrees[subgroup_id]), BigInt(graph.edge_count()));
}

StarDecomposition star_decomposition(const SgbGraph& graph) {
  StarDecomposition out;
  for (auto d : graph.degrees) {
    if (d == 0) {
      ++out.isolated;
    } else {
      out.stars.push_back(d);
    }
  }
  std::sort(out.stars.begin(), out.stars.end());
  return out;
}

}  // namespace sgb
