#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgb/group.hpp"

namespace sgb {

// A subgroup in canonical form: its strictly sorted element list.
struct Subgroup {
  std::vector<Element> elements;
  std::size_t id = 0;
  std::size_t parent_order = 0;
  // A generating set found during enumeration (not necessarily minimal).
  std::vector<Element> generators;

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(Element x) const;
};

// Lexicographic order on element lists; transparent so spans can be looked up.
struct ElementSetLess {
  using is_transparent = void;
  bool operator()(std::span<const Element> a, std::span<const Element> b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

// Closure of a generating set under multiplication. Holds a membership bitmap
// sized to the group so repeated closures avoid reallocating.
class SubgroupCloser {
 public:
  explicit SubgroupCloser(const FiniteGroup& g);

  // Smallest subgroup containing `seed` and `gens`. `seed` must already be a
  // subgroup (or empty). The result is sorted.
  std::vector<Element> close(std::span<const Element> seed, std::span<const Element> gens);

 private:
  const FiniteGroup* group_;
  std::vector<std::uint8_t> member_;
  std::vector<Element> buffer_;
};

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Element> gens);

// The complete set L(G), ordered by size then lexicographically by element
// list. Id 0 is the trivial subgroup and the last id is G.
class SubgroupLattice {
 public:
  const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  const Subgroup& operator[](std::size_t id) const { return subgroups_.at(id); }

  std::size_t parent_order() const noexcept { return parent_order_; }
  const std::string& parent_name() const noexcept { return parent_name_; }

  std::size_t trivial_id() const noexcept { return 0; }
  std::size_t whole_id() const noexcept { return subgroups_.size() - 1; }

  std::optional<std::size_t> find(std::span<const Element> sorted_elements) const;

  // Throws kNotFound when the set is not a member.
  std::size_t lookup(std::span<const Element> sorted_elements) const;

 private:
  friend SubgroupLattice all_subgroups(const FiniteGroup& g, std::size_t max_order);

  std::size_t parent_order_ = 0;
  std::string parent_name_;
  std::vector<Subgroup> subgroups_;
  std::map<std::vector<Element>, std::size_t, ElementSetLess> index_;
};

// Seeds with every cyclic subgroup, then joins each known subgroup with each
// element until no new subgroup appears.
SubgroupLattice all_subgroups(const FiniteGroup& g, std::size_t max_order);
SubgroupLattice all_subgroups(const FiniteGroup& g);

}  // namespace sgb
