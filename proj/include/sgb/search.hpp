#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sgb/config.hpp"
#include "sgb/group.hpp"
#include "sgb/sgb_graph.hpp"

namespace sgb {

// Declaration order is the tie-break order within one group order.
enum class SearchFamily { kCyclic, kDihedral, kDicyclic, kAbelian, kUserTables };

std::string_view to_string(SearchFamily family);
std::optional<SearchFamily> parse_search_family(std::string_view name);

struct SearchConfig {
  std::set<SearchFamily> families;
  std::size_t max_order = kDefaultMaxOrder;
  std::vector<std::filesystem::path> table_paths;
  std::filesystem::path output_path;
  bool resume = false;
  unsigned threads = 1;

  // max_order must be positive and within the configured cap.
  void validate() const;
};

// One group to test. Table groups are loaded during enumeration.
struct GroupEntry {
  std::string descriptor;
  SearchFamily family = SearchFamily::kCyclic;
  // Cyclic/dihedral/dicyclic: the constructor argument n. Abelian: the
  // prime-power factor orders. Tables: the table order.
  std::vector<std::uint64_t> params;
  std::size_t order = 0;
  std::shared_ptr<const FiniteGroup> table_group;

  FiniteGroup build() const;
};

// Deterministic, ordered by (order, family, params), with duplicate descriptors
// dropped. Abelian groups are products of prime-power cyclic factors: primes
// ascending, exponents descending within a prime, e.g. "Z4xZ2xZ3".
std::vector<GroupEntry> enumerate_groups(const SearchConfig& config);

struct SearchRecord {
  std::string descriptor;
  std::uint64_t order = 0;
  std::size_t lattice_size = 0;
  BigInt m1;
  BigInt m2;
  // |L(G)| P - 1 in lowest terms.
  BigInt criterion_numerator;
  BigInt criterion_denominator = 1;
  bool hv_holds = false;
  std::int64_t elapsed_ms = 0;
  // Set when the group was not evaluated (for example, over the order cap).
  std::optional<std::string> skipped;
};

// One JSON object per line, no trailing newline.
std::string to_jsonl_line(const SearchRecord& record);
SearchRecord parse_jsonl_line(std::string_view line);

// Runs lattice, B(G) and the index report for one group. Resource-limit
// failures come back as a skipped record.
SearchRecord evaluate_group(const GroupEntry& entry, std::size_t max_order, unsigned threads);

struct SearchSummary {
  std::size_t enumerated = 0;
  std::size_t computed = 0;   // evaluated in this run
  std::size_t resumed = 0;    // already present in the output
  std::size_t skipped = 0;    // skipped rows across the whole output
  std::size_t violations = 0; // across the whole output
  std::filesystem::path output_path;
  std::filesystem::path csv_path;
};

// "<stem>.csv" next to the JSONL log.
std::filesystem::path summary_csv_path(const std::filesystem::path& jsonl_path);

// Appends one record per enumerated group to the JSONL log in enumeration
// order, then rewrites the CSV summary from the whole log. With `resume`,
// descriptors already in the log are not recomputed.
SearchSummary run_search(const SearchConfig& config);

}  // namespace sgb
