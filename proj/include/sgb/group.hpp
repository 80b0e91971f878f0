#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace sgb {

// Elements of a group of order n are the dense indices 0..n-1.
using Element = std::uint32_t;

enum class GroupFamily { kCyclic, kDihedral, kDicyclic, kProduct, kTable };

const char* to_string(GroupFamily family);

// Identifies how a group was built. `name` is the human-readable label used in
// reports and as the search key ("Z6", "D8", "Q16", "Z2xZ2", "table:klein.tbl").
struct GroupDescriptor {
  GroupFamily family = GroupFamily::kTable;
  std::vector<std::uint64_t> params;
  std::string name;

  bool operator==(const GroupDescriptor&) const = default;
};

struct BuildOptions {
  // Run the full O(n^3) axiom check on a generated table.
  bool validate = false;
};

// A finite group with a materialized multiplication table. Immutable after
// construction, so it can be shared read-only between threads.
class FiniteGroup {
 public:
  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }

  Element mul(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
  Element inv(Element a) const noexcept { return inverse_[a]; }

  // Row `a` of the table: mul(a, b) for b = 0..n-1.
  std::span<const Element> row(Element a) const noexcept {
    return {table_.data() + a * order_, order_};
  }

  const GroupDescriptor& descriptor() const noexcept { return descriptor_; }

  bool is_abelian() const noexcept;

  // Checks every group axiom, throwing NotAGroupError with a witness on the
  // first violation found. Checks run in the order latin square, identity,
  // inverses, associativity.
  void validate() const;

  using Rule = std::function<Element(Element, Element)>;

  // Fills the table from a closed-form multiplication rule. The rule must
  // describe a group; pass options.validate to check it.
  static FiniteGroup from_rule(std::size_t n, GroupDescriptor descriptor, const Rule& rule,
                               BuildOptions options = {});

 private:
  FiniteGroup() = default;
  void derive_identity_and_inverses();

  std::size_t order_ = 0;
  Element identity_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  GroupDescriptor descriptor_;
};

// Integers mod n under addition.
FiniteGroup make_cyclic(std::size_t n, BuildOptions options = {});

// D_{2n} = <a, b | a^n = b^2 = 1, bab = a^-1>, order 2n. Index i < n is a^i and
// index n + i is a^i b.
FiniteGroup make_dihedral(std::size_t n, BuildOptions options = {});

// Q_{4n} = <a, b | a^{2n} = 1, b^2 = a^n, bab^-1 = a^-1>, order 4n. Index i < 2n
// is a^i and index 2n + i is a^i b.
FiniteGroup make_dicyclic(std::size_t n, BuildOptions options = {});

// g x h with (i, j) encoded as i * |h| + j.
FiniteGroup make_direct_product(const FiniteGroup& g, const FiniteGroup& h,
                                BuildOptions options = {});

// Validates an arbitrary Cayley table. Row i gives mul(i, j) for each j.
// An empty name becomes "table<n>".
FiniteGroup from_cayley_table(const std::vector<std::vector<Element>>& table,
                              std::string name = {});

// Plain-text table format: first line n, then n rows of n 0-based indices.
// Lines starting with '#' are comments.
std::vector<std::vector<Element>> parse_cayley_table(std::istream& in);
FiniteGroup read_cayley_table(const std::filesystem::path& path);

// Smallest k >= 1 with x^k = identity.
std::size_t element_order(const FiniteGroup& g, Element x);

}  // namespace sgb
