#include "sgb/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "sgb/error.hpp"
#include "sgb/indices.hpp"
#include "sgb/lattice.hpp"
#include "sgb/report.hpp"

namespace sgb {
namespace fs = std::filesystem;

namespace {

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t m) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    unsigned k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (k) out.emplace_back(p, k);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

// Partitions of k into non-increasing parts.
void partitions(unsigned k, unsigned max_part, std::vector<unsigned>& current,
                std::vector<std::vector<unsigned>>& out) {
  if (k == 0) {
    out.push_back(current);
    return;
  }
  for (unsigned part = std::min(k, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(k - part, part, current, out);
    current.pop_back();
  }
}

// Every abelian group of order m as a list of prime-power factor orders.
std::vector<std::vector<std::uint64_t>> abelian_factorizations(std::uint64_t m) {
  std::vector<std::vector<std::uint64_t>> result{{}};
  for (const auto& [p, k] : factorize(m)) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> scratch;
    partitions(k, k, scratch, parts);
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& prefix : result) {
      for (const auto& partition : parts) {
        auto factors = prefix;
        for (unsigned e : partition) {
          std::uint64_t q = 1;
          for (unsigned i = 0; i < e; ++i) q *= p;
          factors.push_back(q);
        }
        next.push_back(std::move(factors));
      }
    }
    result = std::move(next);
  }
  return result;
}

std::string abelian_name(const std::vector<std::uint64_t>& factors) {
  if (factors.empty()) return "Z1";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "x";
    out += "Z" + std::to_string(factors[i]);
  }
  return out;
}

bool read_all_lines(const fs::path& path, std::vector<std::string>& lines) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return true;
}

// Drops a partially written final line so appends start on a fresh line.
void trim_partial_tail(const fs::path& path) {
  std::error_code ec;
  const auto size = fs::file_size(path, ec);
  if (ec || size == 0) return;
  std::ifstream in(path, std::ios::binary);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  if (content.back() == '\n') return;
  const auto last_newline = content.find_last_of('\n');
  fs::resize_file(path, last_newline == std::string::npos ? 0 : last_newline + 1);
}

std::string csv_row(const SearchRecord& r) {
  std::string criterion =
      r.skipped ? "skipped" : r.criterion_numerator.str() + "/" + r.criterion_denominator.str();
  std::string row = r.descriptor + "," + std::to_string(r.order) + ",";
  row += r.skipped ? "" : std::to_string(r.lattice_size);
  row += ",";
  row += r.skipped ? "" : r.m1.str();
  row += ",";
  row += r.skipped ? "" : r.m2.str();
  row += "," + criterion + ",";
  row += r.skipped ? "skipped" : (r.hv_holds ? "true" : "false");
  return row;
}

constexpr const char* kCsvHeader = "descriptor,order,lattice_size,m1,m2,criterion,hv_holds";

void write_csv(const fs::path& path, const std::vector<SearchRecord>& records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIoError, "cannot write summary '" + path.string() + "'");
  out << kCsvHeader << '\n';
  for (const auto& r : records) out << csv_row(r) << '\n';
  out << "\n# violations\n" << kCsvHeader << '\n';
  for (const auto& r : records) {
    if (!r.skipped && !r.hv_holds) out << csv_row(r) << '\n';
  }
  if (!out) throw Error(ErrorKind::kIoError, "failed writing summary '" + path.string() + "'");
}

}  // namespace

std::string_view to_string(SearchFamily family) {
  switch (family) {
    case SearchFamily::kCyclic: return "cyclic";
    case SearchFamily::kDihedral: return "dihedral";
    case SearchFamily::kDicyclic: return "dicyclic";
    case SearchFamily::kAbelian: return "abelian";
    case SearchFamily::kUserTables: return "user_tables";
  }
  return "unknown";
}

std::optional<SearchFamily> parse_search_family(std::string_view name) {
  for (auto f : {SearchFamily::kCyclic, SearchFamily::kDihedral, SearchFamily::kDicyclic,
                 SearchFamily::kAbelian, SearchFamily::kUserTables}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

void SearchConfig::validate() const {
  const std::size_t cap = sgb::max_order();
  if (max_order == 0 || max_order > cap) {
    throw Error(ErrorKind::kInvalidInput, "max_order " + std::to_string(max_order) +
                                              " must be in 1.." + std::to_string(cap) +
                                              " (raise SGB_MAX_ORDER to go higher)");
  }
  if (families.contains(SearchFamily::kUserTables) && table_paths.empty()) {
    throw Error(ErrorKind::kInvalidInput, "user_tables family needs at least one table path");
  }
}

FiniteGroup GroupEntry::build() const {
  switch (family) {
    case SearchFamily::kCyclic: return make_cyclic(params.at(0));
    case SearchFamily::kDihedral: return make_dihedral(params.at(0));
    case SearchFamily::kDicyclic: return make_dicyclic(params.at(0));
    case SearchFamily::kAbelian: {
      if (params.empty()) return make_cyclic(1);
      FiniteGroup g = make_cyclic(params[0]);
      for (std::size_t i = 1; i < params.size(); ++i) {
        g = make_direct_product(g, make_cyclic(params[i]));
      }
      return g;
    }
    case SearchFamily::kUserTables: return *table_group;
  }
  throw Error(ErrorKind::kInvalidInput, "unknown family");
}

std::vector<GroupEntry> enumerate_groups(const SearchConfig& config) {
  config.validate();
  const std::uint64_t max = config.max_order;
  std::vector<GroupEntry> entries;
  auto has = [&config](SearchFamily f) { return config.families.contains(f); };

  if (has(SearchFamily::kCyclic)) {
    for (std::uint64_t n = 1; n <= max; ++n) {
      entries.push_back({"Z" + std::to_string(n), SearchFamily::kCyclic, {n}, n, nullptr});
    }
  }
  if (has(SearchFamily::kDihedral)) {
    for (std::uint64_t n = 1; 2 * n <= max; ++n) {
      entries.push_back({"D" + std::to_string(2 * n), SearchFamily::kDihedral, {n}, 2 * n, nullptr});
    }
  }
  if (has(SearchFamily::kDicyclic)) {
    for (std::uint64_t n = 1; 4 * n <= max; ++n) {
      entries.push_back({"Q" + std::to_string(4 * n), SearchFamily::kDicyclic, {n}, 4 * n, nullptr});
    }
  }
  if (has(SearchFamily::kAbelian)) {
    for (std::uint64_t m = 1; m <= max; ++m) {
      for (auto& factors : abelian_factorizations(m)) {
        std::string name = abelian_name(factors);
        entries.push_back({std::move(name), SearchFamily::kAbelian, std::move(factors), m, nullptr});
      }
    }
  }
  if (has(SearchFamily::kUserTables)) {
    for (const auto& path : config.table_paths) {
      auto g = std::make_shared<const FiniteGroup>(read_cayley_table(path));
      entries.push_back({g->descriptor().name, SearchFamily::kUserTables, {g->order()},
                         g->order(), g});
    }
  }

  std::stable_sort(entries.begin(), entries.end(), [](const GroupEntry& a, const GroupEntry& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.family != b.family) return a.family < b.family;
    return a.params < b.params;
  });
  std::unordered_set<std::string> seen;
  std::erase_if(entries, [&seen](const GroupEntry& e) { return !seen.insert(e.descriptor).second; });
  return entries;
}

std::string to_jsonl_line(const SearchRecord& r) {
  Json j;
  j["descriptor"] = r.descriptor;
  j["order"] = r.order;
  if (r.skipped) {
    j["skipped"] = *r.skipped;
  } else {
    j["lattice_size"] = r.lattice_size;
    j["m1"] = big_to_json(r.m1);
    j["m2"] = big_to_json(r.m2);
    j["criterion_numerator"] = big_to_json(r.criterion_numerator);
    j["criterion_denominator"] = big_to_json(r.criterion_denominator);
    j["hv_holds"] = r.hv_holds;
  }
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

SearchRecord parse_jsonl_line(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kInvalidInput, std::string("malformed search record: ") + e.what());
  }
  try {
    SearchRecord r;
    r.descriptor = j.at("descriptor").get<std::string>();
    r.order = j.at("order").get<std::uint64_t>();
    r.elapsed_ms = j.value("elapsed_ms", std::int64_t{0});
    if (j.contains("skipped")) {
      r.skipped = j.at("skipped").get<std::string>();
      return r;
    }
    r.lattice_size = j.at("lattice_size").get<std::size_t>();
    r.m1 = big_from_json(j.at("m1"));
    r.m2 = big_from_json(j.at("m2"));
    r.criterion_numerator = big_from_json(j.at("criterion_numerator"));
    r.criterion_denominator = big_from_json(j.at("criterion_denominator"));
    r.hv_holds = j.at("hv_holds").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kInvalidInput, std::string("incomplete search record: ") + e.what());
  }
}

SearchRecord evaluate_group(const GroupEntry& entry, std::size_t max_order, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  SearchRecord r;
  r.descriptor = entry.descriptor;
  r.order = entry.order;
  try {
    if (entry.order > max_order) {
      throw Error(ErrorKind::kResourceLimit, "order " + std::to_string(entry.order) +
                                                 " above the cap of " + std::to_string(max_order));
    }
    const FiniteGroup g = entry.build();
    const SubgroupLattice lattice = all_subgroups(g, max_order);
    const SgbGraph graph = build_sgb(g, lattice, threads);
    const IndexReport report = index_report(graph);
    r.lattice_size = graph.lattice_size;
    r.m1 = report.m1;
    r.m2 = report.m2;
    r.criterion_numerator = numerator(report.hv.criterion);
    r.criterion_denominator = denominator(report.hv.criterion);
    r.hv_holds = report.hv.holds;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kResourceLimit) throw;
    r.skipped = e.what();
  }
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

fs::path summary_csv_path(const fs::path& jsonl_path) {
  fs::path csv = jsonl_path;
  csv.replace_extension(".csv");
  if (csv == jsonl_path) csv.replace_extension(".summary.csv");
  return csv;
}

SearchSummary run_search(const SearchConfig& config) {
  if (config.output_path.empty()) throw Error(ErrorKind::kInvalidInput, "no output path");
  const std::vector<GroupEntry> entries = enumerate_groups(config);
  const fs::path& out_path = config.output_path;

  SearchSummary summary;
  summary.enumerated = entries.size();
  summary.output_path = out_path;
  summary.csv_path = summary_csv_path(out_path);

  std::set<std::string> done;
  if (config.resume && fs::exists(out_path)) {
    trim_partial_tail(out_path);
    std::vector<std::string> lines;
    read_all_lines(out_path, lines);
    for (const auto& line : lines) done.insert(parse_jsonl_line(line).descriptor);
  } else {
    if (out_path.has_parent_path()) fs::create_directories(out_path.parent_path());
    std::ofstream truncate(out_path, std::ios::binary | std::ios::trunc);
    if (!truncate) throw Error(ErrorKind::kIoError, "cannot create '" + out_path.string() + "'");
  }

  std::vector<const GroupEntry*> todo;
  for (const auto& e : entries) {
    if (done.contains(e.descriptor)) {
      ++summary.resumed;
    } else {
      todo.push_back(&e);
    }
  }

  std::ofstream log(out_path, std::ios::binary | std::ios::app);
  if (!log) throw Error(ErrorKind::kIoError, "cannot append to '" + out_path.string() + "'");

  auto append = [&](const SearchRecord& record) {
    log << to_jsonl_line(record) << '\n';
    log.flush();
    if (!log) throw Error(ErrorKind::kIoError, "failed appending to '" + out_path.string() + "'");
    ++summary.computed;
  };

  const unsigned threads = std::max(1u, config.threads);
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, todo.size()));
  if (workers <= 1) {
    for (const GroupEntry* entry : todo) append(evaluate_group(*entry, config.max_order, threads));
  } else {
    // Groups run concurrently with sequential graph builds; the writer appends
    // completed records strictly in enumeration order.
    std::vector<std::optional<SearchRecord>> results(todo.size());
    std::exception_ptr failure;
    std::mutex mu;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};

    auto work = [&] {
      for (std::size_t i = next++; i < todo.size() && !stop; i = next++) {
        try {
          SearchRecord r = evaluate_group(*todo[i], config.max_order, 1);
          std::lock_guard lock(mu);
          results[i] = std::move(r);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!failure) failure = std::current_exception();
          stop = true;
        }
        ready.notify_all();
      }
    };

    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
      try {
        for (std::size_t i = 0; i < todo.size(); ++i) {
          std::optional<SearchRecord> record;
          {
            std::unique_lock lock(mu);
            ready.wait(lock, [&] { return results[i].has_value() || failure != nullptr; });
            if (!results[i]) break;
            record = std::move(results[i]);
            results[i].reset();
          }
          append(*record);
        }
      } catch (...) {
        stop = true;
        throw;
      }
      stop = true;
    }
    if (failure) std::rethrow_exception(failure);
  }
  log.close();

  std::vector<std::string> lines;
  read_all_lines(out_path, lines);
  std::vector<SearchRecord> all;
  all.reserve(lines.size());
  for (const auto& line : lines) {
    all.push_back(parse_jsonl_line(line));
    if (all.back().skipped) {
      ++summary.skipped;
    } else if (!all.back().hv_holds) {
      ++summary.violations;
    }
  }
  write_csv(summary.csv_path, all);
  return summary;
}

}  // namespace sgb
