// Command-line front end: report, verify, search, check-generic.
//
// Exit codes: 0 success, 1 conjecture violation or verification mismatch,
// 2 usage or input error, 3 internal invariant failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sgb/closed_forms.hpp"
#include "sgb/config.hpp"
#include "sgb/error.hpp"
#include "sgb/indices.hpp"
#include "sgb/lattice.hpp"
#include "sgb/report.hpp"
#include "sgb/search.hpp"
#include "sgb/sgb_graph.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code_for(const sgb::Error& e) {
  switch (e.kind()) {
    case sgb::ErrorKind::kInternalInconsistency:
    case sgb::ErrorKind::kNotFound:
    case sgb::ErrorKind::kNonIntegralResult:
      return kExitInternal;
    default:
      return kExitUsage;
  }
}

struct ReportArgs {
  std::string family;
  std::optional<std::uint64_t> order;
  std::optional<std::uint64_t> param;
  std::uint64_t n = 1;
  std::string table;
  bool json = false;
  std::string dot;
};

sgb::FiniteGroup resolve_group(const ReportArgs& args) {
  if (!args.table.empty()) {
    if (!args.family.empty() || args.order || args.param) {
      throw UsageError("--table cannot be combined with --family/--order/--param");
    }
    return sgb::read_cayley_table(args.table);
  }
  if (args.family.empty()) throw UsageError("one of --family or --table is required");
  if (args.order.has_value() == args.param.has_value()) {
    throw UsageError("give exactly one of --order or --param");
  }
  std::uint64_t n = 0;
  if (args.param) {
    n = 1;
    for (std::uint64_t i = 0; i < args.n; ++i) {
      n *= *args.param;
      if (n > sgb::kMaxTableOrder) throw UsageError("parameter too large");
    }
  }
  const std::uint64_t order = args.order.value_or(0);
  if (args.family == "cyclic") {
    if (args.order) n = order;
    if (n == 0) throw UsageError("cyclic order must be positive");
    return sgb::make_cyclic(n);
  }
  if (args.family == "dihedral") {
    if (args.order) {
      if (order == 0 || order % 2 != 0) throw UsageError("dihedral order must be even and positive");
      n = order / 2;
    }
    if (n == 0) throw UsageError("dihedral parameter must be positive");
    return sgb::make_dihedral(n);
  }
  if (args.family == "dicyclic") {
    if (args.order) {
      if (order == 0 || order % 4 != 0) {
        throw UsageError("dicyclic order must be a positive multiple of 4");
      }
      n = order / 4;
    }
    if (n == 0) throw UsageError("dicyclic parameter must be positive");
    return sgb::make_dicyclic(n);
  }
  throw UsageError("unknown family '" + args.family + "' (cyclic, dihedral, dicyclic)");
}

int run_report(const ReportArgs& args) {
  const sgb::FiniteGroup g = resolve_group(args);
  if (g.order() > sgb::max_order()) {
    throw UsageError(g.descriptor().name + " exceeds the order cap of " +
                     std::to_string(sgb::max_order()));
  }
  const sgb::SubgroupLattice lattice = sgb::all_subgroups(g);
  const sgb::SgbGraph graph = sgb::build_sgb(g, lattice);
  if (!args.dot.empty()) {
    std::ofstream out(args.dot);
    if (!out) throw sgb::Error(sgb::ErrorKind::kIoError, "cannot write '" + args.dot + "'");
    out << sgb::report_to_dot(graph);
    return kExitOk;
  }
  const sgb::IndexReport report = sgb::index_report(graph);
  const auto isolated = sgb::star_decomposition(graph).isolated;
  if (isolated > 0) {
    std::cerr << "note: " << isolated
              << " subgroup(s) are not 2-generated and are isolated vertices of B(G)\n";
  }
  std::cout << sgb::report_to_json(graph, report).dump(2) << '\n';
  return kExitOk;
}

struct VerifyArgs {
  std::vector<std::string> families;
  std::vector<std::uint64_t> primes{2, 3, 5};
  std::uint64_t n_max = 3;
};

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "}";
}

int run_verify(const VerifyArgs& args) {
  std::vector<sgb::FamilyKind> kinds;
  if (args.families.empty()) {
    kinds.assign(std::begin(sgb::kAllFamilyKinds), std::end(sgb::kAllFamilyKinds));
  } else {
    for (const auto& name : args.families) {
      auto kind = sgb::parse_family_kind(name);
      if (!kind) throw UsageError("unknown family '" + name + "'");
      kinds.push_back(*kind);
    }
  }
  std::size_t checked = 0, mismatched = 0, skipped = 0;
  for (auto kind : kinds) {
    for (auto p : args.primes) {
      const std::uint64_t n_hi = kind == sgb::FamilyKind::kCyclicPn ? args.n_max : 1;
      for (std::uint64_t n = 1; n <= n_hi; ++n) {
        sgb::FamilySpec spec{kind, p, n};
        try {
          spec.validate();
          if (spec.group_order() > sgb::max_order()) {
            std::cout << "skip " << spec.label() << ": order " << spec.group_order()
                      << " above the cap\n";
            ++skipped;
            continue;
          }
        } catch (const sgb::Error& e) {
          std::cout << "skip " << spec.label() << ": " << e.what() << '\n';
          ++skipped;
          continue;
        }
        const auto r = sgb::verify_family(spec);
        ++checked;
        auto flag = [](bool ok) { return ok ? "ok" : "MISMATCH"; };
        std::cout << (r.all_match() ? "ok   " : "FAIL ") << spec.label()
                  << " order=" << spec.group_order() << " structure=" << flag(r.structure_match)
                  << " m1=" << flag(r.m1_match) << " m2=" << flag(r.m2_match)
                  << " hv=" << flag(r.hv_match) << " indices=" << flag(r.indices_match) << '\n';
        if (!r.all_match()) {
          ++mismatched;
          std::cout << "     brute   stars=" << join(r.brute.stars.stars)
                    << " M1=" << r.brute.zagreb.m1 << " M2=" << r.brute.zagreb.m2 << '\n'
                    << "     formula stars=" << join(r.formula.stars.stars)
                    << " M1=" << r.formula.zagreb.m1 << " M2=" << r.formula.zagreb.m2 << '\n';
        }
        if (r.brute.stars.isolated > 0) {
          std::cout << "     note: " << r.brute.stars.isolated << " isolated subgroup vertices\n";
        }
      }
    }
  }
  std::cout << "checked " << checked << ", mismatched " << mismatched << ", skipped " << skipped
            << '\n';
  return mismatched == 0 ? kExitOk : kExitViolation;
}

struct SearchArgs {
  std::vector<std::string> families;
  std::size_t max_order = 0;
  std::string out;
  bool resume = false;
  std::vector<std::string> tables;
  unsigned threads = 0;
};

int run_search(const SearchArgs& args) {
  sgb::SearchConfig config;
  for (const auto& name : args.families) {
    auto f = sgb::parse_search_family(name);
    if (!f) throw UsageError("unknown search family '" + name + "'");
    config.families.insert(*f);
  }
  config.max_order = args.max_order;
  for (const auto& t : args.tables) config.table_paths.emplace_back(t);
  if (!config.table_paths.empty()) config.families.insert(sgb::SearchFamily::kUserTables);
  config.output_path = args.out;
  config.resume = args.resume;
  config.threads = args.threads == 0 ? sgb::worker_threads() : args.threads;

  const auto summary = sgb::run_search(config);
  std::cout << "groups enumerated: " << summary.enumerated << '\n'
            << "computed: " << summary.computed << ", resumed: " << summary.resumed
            << ", skipped: " << summary.skipped << '\n'
            << "violations: " << summary.violations << '\n'
            << "log: " << summary.output_path.string() << '\n'
            << "summary: " << summary.csv_path.string() << '\n';
  return summary.violations == 0 ? kExitOk : kExitViolation;
}

int run_check_generic(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sgb::Error(sgb::ErrorKind::kIoError, "cannot read '" + path + "'");
  const sgb::GenericGraph graph = sgb::parse_generic_graph(in);
  const sgb::HvVerdict v = sgb::check_hv_generic(graph.degrees, graph.edges);
  sgb::Json out = sgb::verdict_to_json(v);
  out["vertices"] = graph.degrees.size();
  out["edges"] = graph.edges.size();
  std::cout << out.dump(2) << '\n';
  return v.holds ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subgroup-generating bipartite graphs: Zagreb indices and the "
               "Hansen-Vukicevic inequality"};
  app.require_subcommand(1);

  ReportArgs report_args;
  auto* report = app.add_subcommand("report", "Index report for one group (JSON or DOT)");
  report->add_option("--family", report_args.family, "cyclic, dihedral or dicyclic");
  report->add_option("--order", report_args.order, "Group order");
  report->add_option("--param", report_args.param, "Constructor parameter n (Z_n, D_2n, Q_4n)");
  report->add_option("--n", report_args.n, "Raise --param to this power")->check(CLI::PositiveNumber);
  report->add_option("--table", report_args.table, "Cayley table file");
  auto* json_flag = report->add_flag("--json", report_args.json, "JSON on stdout (default)");
  report->add_option("--dot", report_args.dot, "Write a Graphviz file instead")->excludes(json_flag);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Compare closed forms with brute force");
  verify->add_option("--families", verify_args.families, "Comma-separated family list")
      ->delimiter(',');
  verify->add_option("--primes", verify_args.primes, "Comma-separated primes")->delimiter(',');
  verify->add_option("--n-max", verify_args.n_max, "Largest n for cyclic_pn")
      ->check(CLI::PositiveNumber);

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Batch counterexample search");
  search->add_option("--families", search_args.families,
                     "cyclic, dihedral, dicyclic, abelian, user_tables")
      ->delimiter(',');
  search->add_option("--max-order", search_args.max_order, "Largest group order")->required();
  search->add_option("--out", search_args.out, "JSONL log path")->required();
  search->add_flag("--resume", search_args.resume, "Skip groups already in the log");
  search->add_option("--table", search_args.tables, "Cayley table file (repeatable)");
  search->add_option("--threads", search_args.threads, "Worker count (default SGB_THREADS)");

  std::string degrees_path;
  auto* generic = app.add_subcommand("check-generic", "Check an arbitrary degree sequence");
  generic->add_option("--degrees", degrees_path, "Degree/edge file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (report->parsed()) return run_report(report_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (search->parsed()) return run_search(search_args);
    if (generic->parsed()) return run_check_generic(degrees_path);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sgb::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
