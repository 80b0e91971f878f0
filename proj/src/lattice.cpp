#include "sgb/lattice.hpp"

#include <algorithm>
#include <deque>

#include "sgb/config.hpp"
#include "sgb/error.hpp"

namespace sgb {
namespace {

void check_elements(const FiniteGroup& g, std::span<const Element> xs) {
  for (Element x : xs) {
    if (x >= g.order()) {
      throw Error(ErrorKind::kInvalidElement, "generator " + std::to_string(x) +
                                                  " not in a group of order " +
                                                  std::to_string(g.order()));
    }
  }
}

}  // namespace

bool Subgroup::contains(Element x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

SubgroupCloser::SubgroupCloser(const FiniteGroup& g) : group_(&g), member_(g.order(), 0) {
  buffer_.reserve(g.order());
}

std::vector<Element> SubgroupCloser::close(std::span<const Element> seed,
                                           std::span<const Element> gens) {
  const FiniteGroup& g = *group_;
  buffer_.clear();
  auto add = [this](Element x) {
    if (!member_[x]) {
      member_[x] = 1;
      buffer_.push_back(x);
    }
  };
  add(g.identity());
  for (Element x : seed) add(x);
  for (Element x : gens) add(x);
  // Right-multiplying every member by every generator reaches the whole
  // subgroup: in a finite group the generated monoid is already a group.
  for (std::size_t i = 0; i < buffer_.size(); ++i) {
    const Element x = buffer_[i];
    for (Element s : gens) add(g.mul(x, s));
  }
  for (Element x : buffer_) member_[x] = 0;
  std::vector<Element> out(buffer_);
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> gens) {
  check_elements(g, gens);
  SubgroupCloser closer(g);
  Subgroup h;
  h.elements = closer.close({}, gens);
  h.parent_order = g.order();
  h.generators.assign(gens.begin(), gens.end());
  return h;
}

std::optional<std::size_t> SubgroupLattice::find(std::span<const Element> sorted_elements) const {
  auto it = index_.find(sorted_elements);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SubgroupLattice::lookup(std::span<const Element> sorted_elements) const {
  if (auto id = find(sorted_elements)) return *id;
  std::string shown;
  for (std::size_t i = 0; i < sorted_elements.size() && i < 8; ++i) {
    shown += (i ? "," : "") + std::to_string(sorted_elements[i]);
  }
  if (sorted_elements.size() > 8) shown += ",...";
  throw Error(ErrorKind::kNotFound, "element set {" + shown + "} of size " +
                                        std::to_string(sorted_elements.size()) +
                                        " is not in the lattice of " + parent_name_);
}

SubgroupLattice all_subgroups(const FiniteGroup& g) { return all_subgroups(g, max_order()); }

SubgroupLattice all_subgroups(const FiniteGroup& g, std::size_t max_order) {
  const std::size_t n = g.order();
  if (n > max_order) {
    throw Error(ErrorKind::kResourceLimit, g.descriptor().name + " has order " +
                                               std::to_string(n) + ", above the cap of " +
                                               std::to_string(max_order));
  }

  SubgroupCloser closer(g);
  // Working set keyed by canonical element list, mapping to a generator list.
  std::map<std::vector<Element>, std::vector<Element>, ElementSetLess> found;
  std::deque<const std::vector<Element>*> pending;

  auto insert = [&](std::vector<Element> elements, std::vector<Element> gens) {
    auto [it, inserted] = found.emplace(std::move(elements), std::move(gens));
    if (inserted) pending.push_back(&it->first);
  };

  for (Element x = 0; x < n; ++x) {
    const Element gen[] = {x};
    insert(closer.close({}, gen), x == g.identity() ? std::vector<Element>{}
                                                    : std::vector<Element>{x});
  }

  // Every subgroup is a join of cyclic subgroups, so joining each member with
  // single elements until a fixed point reaches all of L(G).
  std::vector<std::uint8_t> member(n);
  while (!pending.empty()) {
    const std::vector<Element>& h = *pending.front();
    pending.pop_front();
    const std::vector<Element> h_gens = found.at(h);
    std::fill(member.begin(), member.end(), 0);
    for (Element x : h) member[x] = 1;
    for (Element x = 0; x < n; ++x) {
      if (member[x]) continue;
      std::vector<Element> gens = h_gens;
      gens.push_back(x);
      auto joined = closer.close(h, gens);
      if (found.find(joined) == found.end()) insert(std::move(joined), std::move(gens));
    }
  }

  std::vector<std::pair<const std::vector<Element>*, const std::vector<Element>*>> order;
  order.reserve(found.size());
  for (const auto& [elements, gens] : found) order.emplace_back(&elements, &gens);
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return a.first->size() < b.first->size();
  });

  SubgroupLattice lattice;
  lattice.parent_order_ = n;
  lattice.parent_name_ = g.descriptor().name;
  lattice.subgroups_.reserve(order.size());
  for (const auto& [elements, gens] : order) {
    Subgroup s;
    s.elements = *elements;
    s.id = lattice.subgroups_.size();
    s.parent_order = n;
    s.generators = *gens;
    lattice.index_.emplace(s.elements, s.id);
    lattice.subgroups_.push_back(std::move(s));
  }
  return lattice;
}

}  // namespace sgb
