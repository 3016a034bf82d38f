// bergepath: command-line front end for Berge path/cycle Turán computations.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bergepath/berge.hpp"
#include "bergepath/canonical.hpp"
#include "bergepath/constructions.hpp"
#include "bergepath/formulas.hpp"
#include "bergepath/io.hpp"
#include "bergepath/sparse_set.hpp"
#include "bergepath/search.hpp"

namespace bp = bergepath;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParameter = 2;
constexpr int kExitPostcondition = 4;

// Generator output or search report that failed its own guarantees.
struct PostconditionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int default_workers() {
  if (const char* env = std::getenv("BERGEPATH_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid BERGEPATH_WORKERS='" << env << "'\n";
  }
  return 1;
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw bp::ParameterError("range must look like A..B");
  const int lo = std::stoi(text.substr(0, dots));
  const int hi = std::stoi(text.substr(dots + 2));
  if (lo > hi) throw bp::ParameterError("empty range " + text);
  return {lo, hi};
}

// Connected, BP_k-free and of the stated size; the reason otherwise.
std::string verify_construction(const bp::NamedConstruction& c) {
  const auto& h = c.hypergraph;
  if (!bp::is_connected(h)) return "output is not connected";
  if (static_cast<std::int64_t>(h.size()) != c.expected_edges)
    return "edge count " + std::to_string(h.size()) + " != " + std::to_string(c.expected_edges);
  if (auto w = bp::find_berge_path(h, c.k))
    return "contains a Berge path of length " + std::to_string(c.k) + ": " +
           bp::to_json(*w).dump();
  return {};
}

struct Options {
  int workers = default_workers();
  std::size_t witness_cap = 10;
  bool timing = false;
  bool bound_pruning = false;
  std::string checkpoint;

  bp::SearchOptions search() const {
    bp::SearchOptions o;
    o.workers = workers;
    o.witness_cap = witness_cap;
    o.bound_pruning = bound_pruning;
    if (!checkpoint.empty()) o.checkpoint = checkpoint;
    return o;
  }
};

void add_search_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--workers", opt.workers, "Worker threads (default: $BERGEPATH_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--witness-cap", opt.witness_cap, "Maximum extremal witnesses reported");
  cmd->add_flag("--timing", opt.timing, "Include elapsed_ms in the report");
}

std::string table_cell(const bp::SearchOutcome& s) {
  return s.status == bp::SearchStatus::value ? std::to_string(s.value) : "infeasible";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Berge path and cycle Turán numbers of uniform hypergraphs"};
  app.require_subcommand(1);
  Options opt;

  // construct
  std::string family;
  int n = 0, r = 0, k = 0;
  std::string format = "text";
  std::string output;
  auto* construct = app.add_subcommand("construct", "Generate a named extremal construction");
  construct->add_option("family", family, "Family name")
      ->required()
      ->check(CLI::IsMember(bp::family_names()));
  construct->add_option("n", n)->required();
  construct->add_option("r", r)->required();
  construct->add_option("k", k, "Forbidden path length, for families that take one");
  construct->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  construct->add_option("-o,--output", output, "Write to file instead of stdout");

  // check
  std::string file;
  int bp_k = 0, bc_k = 0;
  bool at_least = false;
  auto* check = app.add_subcommand("check", "Test a hypergraph file for a Berge path or cycle");
  check->add_option("file", file)->required()->check(CLI::ExistingFile);
  auto* check_bp = check->add_option("--bp", bp_k, "Berge path length");
  auto* check_bc = check->add_option("--bc", bc_k, "Berge cycle length");
  check_bp->excludes(check_bc);
  check->add_flag("--at-least", at_least, "With --bc, any cycle of length >= k");

  // formula
  bool all_bounds = false;
  auto* formula = app.add_subcommand("formula", "Closed-form connected Turán value");
  formula->add_option("n", n)->required();
  formula->add_option("r", r)->required();
  formula->add_option("k", k)->required();
  formula->add_flag("--all-bounds", all_bounds, "Also evaluate every cited bound in range");

  // exact
  int multiplicity = 1;
  auto* exact = app.add_subcommand("exact", "Exact connected Turán number by exhaustive search");
  exact->add_option("n", n)->required();
  exact->add_option("r", r)->required();
  auto* exact_bp = exact->add_option("--bp", bp_k, "Forbid Berge paths of length k");
  auto* exact_bc = exact->add_option("--bc", bc_k, "Forbid Berge cycles of length k");
  exact_bp->excludes(exact_bc);
  exact->add_flag("--at-least", at_least, "With --bc, forbid every cycle of length >= k");
  exact->add_option("--multiplicity,-m", multiplicity, "Edge multiplicity cap")
      ->check(CLI::PositiveNumber);
  exact->add_option("--checkpoint", opt.checkpoint, "Resumable level checkpoint file");
  exact->add_flag("--bound-pruning", opt.bound_pruning,
                  "Stop at the Kostochka-Luo bound (BP_k with 3 <= k <= r)");
  add_search_flags(exact, opt);

  // lemma-witness
  int m = 1;
  bool constructive = false;
  auto* lemma = app.add_subcommand("lemma-witness", "Find a sparse-neighborhood vertex set");
  lemma->add_option("file", file)->required()->check(CLI::ExistingFile);
  lemma->add_option("-m", m, "Multiplicity bound")->check(CLI::PositiveNumber);
  lemma->add_flag("--constructive", constructive, "Build the set from a longest path");

  // conjecture
  auto* conjecture = app.add_subcommand("conjecture", "Compare exact value with the complete-core value");
  conjecture->add_option("n", n)->required();
  conjecture->add_option("r", r)->required();
  conjecture->add_option("k", k)->required();
  add_search_flags(conjecture, opt);

  // table
  std::string n_range;
  auto* table = app.add_subcommand("table", "CSV of exact vs formula vs construction values");
  table->add_option("--k", k)->required();
  table->add_option("--r", r)->required();
  table->add_option("--n-range", n_range, "A..B")->required();
  add_search_flags(table, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParameter;
  }

  try {
    if (*construct) {
      const auto c = bp::construct_by_name(family, n, r, k);
      if (const auto why = verify_construction(c); !why.empty())
        throw PostconditionFailure(family + "(" + std::to_string(n) + "," + std::to_string(r) +
                                   (k ? "," + std::to_string(k) : "") + "): " + why);
      const std::string body =
          format == "json" ? bp::to_json(c.hypergraph).dump(2) + "\n" : bp::to_text(c.hypergraph);
      if (output.empty()) {
        std::cout << body;
      } else {
        std::ofstream out(output);
        if (!out) throw bp::ParameterError("cannot write " + output);
        out << body;
      }
    } else if (*check) {
      if (!*check_bp && !*check_bc) throw bp::ParameterError("check needs --bp k or --bc k");
      const auto h = bp::load_hypergraph(file);
      nlohmann::json j;
      j["n"] = h.order();
      j["r"] = h.uniformity();
      j["edges"] = h.size();
      j["connected"] = bp::is_connected(h);
      std::optional<bp::BergeWitness> w;
      if (*check_bp) {
        j["forbidden"] = "BP_" + std::to_string(bp_k);
        w = bp::find_berge_path(h, bp_k);
      } else {
        j["forbidden"] = std::string(at_least ? "BC_>=" : "BC_") + std::to_string(bc_k);
        w = bp::find_berge_cycle(h, bc_k, at_least ? bp::CycleMode::at_least : bp::CycleMode::exact);
      }
      j["contains"] = w.has_value();
      j["witness"] = w ? bp::to_json(*w) : nlohmann::json(nullptr);
      print_json(j);
    } else if (*formula) {
      auto j = bp::to_json(bp::conn_bp_value(n, r, k));
      if (all_bounds) {
        nlohmann::json classical = nlohmann::json::object();
        for (auto s : {bp::ClassicalBound::kostochka_luo, bp::ClassicalBound::gkl_small,
                       bp::ClassicalBound::gkl_large, bp::ClassicalBound::dgmt,
                       bp::ClassicalBound::kopylov, bp::ClassicalBound::fkl_conn,
                       bp::ClassicalBound::gsz21}) {
          try {
            classical[bp::to_string(s)] = bp::to_json(bp::classical_bound(s, n, r, k));
          } catch (const bp::ParameterError&) {
          }
        }
        nlohmann::json cycle = nlohmann::json::object();
        for (auto s : {bp::CycleBound::glsz_small, bp::CycleBound::glsz_eq, bp::CycleBound::multi,
                       bp::CycleBound::egmstz, bp::CycleBound::fkl_cycle}) {
          try {
            cycle[bp::to_string(s)] = bp::to_json(bp::bc_value(s, n, r, k));
          } catch (const bp::ParameterError&) {
          }
        }
        j["classical_bounds"] = classical;
        j["cycle_bounds"] = cycle;
      }
      print_json(j);
    } else if (*exact) {
      bp::FamilySpec spec;
      if (*exact_bp) {
        spec = bp::FamilySpec::berge_path(bp_k, multiplicity);
      } else if (*exact_bc) {
        spec = at_least ? bp::FamilySpec::berge_cycle_at_least(bc_k, multiplicity)
                        : bp::FamilySpec::berge_cycle(bc_k, multiplicity);
      } else {
        throw bp::ParameterError("exact needs --bp k or --bc k");
      }
      print_json(bp::to_json(bp::exact_ex_conn(n, r, spec, opt.search()), opt.timing));
    } else if (*lemma) {
      const auto h = bp::load_hypergraph(file);
      const auto report = constructive ? bp::build_sparse_set(h, m) : bp::find_sparse_set(h, m);
      print_json(bp::to_json(report));
      if (report.verdict == bp::SparseVerdict::counterexample)
        throw PostconditionFailure("no sparse-neighborhood set found");
    } else if (*conjecture) {
      const auto report = bp::conjecture_check(n, r, k, opt.search());
      print_json(bp::to_json(report, opt.timing));
      if (!report.construction_verified)
        throw PostconditionFailure("complete-core construction failed verification");
    } else if (*table) {
      const auto [lo, hi] = parse_range(n_range);
      std::ostringstream csv;
      csv << "n,r,k,exact_value|status,formula_value,regime,best_construction,bound_kl\n";
      std::string failures;
      for (int nn = lo; nn <= hi; ++nn) {
        std::string exact_cell;
        try {
          exact_cell = table_cell(bp::exact_ex_conn(nn, r, bp::FamilySpec::berge_path(k), opt.search()));
        } catch (const bp::LimitError&) {
          exact_cell = "limit";
        }
        std::string formula_cell = "undefined", regime_cell = "undefined";
        if (nn >= r) {
          const auto f = bp::conn_bp_value(nn, r, k);
          if (f.value) formula_cell = f.value->to_string();
          regime_cell = bp::to_string(f.regime);
        }
        std::string best = "none";
        std::int64_t best_edges = -1;
        for (const auto& c : bp::applicable_constructions(nn, r, k)) {
          if (const auto why = verify_construction(c); !why.empty()) {
            failures += c.name + "(" + std::to_string(nn) + "," + std::to_string(r) + "): " + why + "\n";
            continue;
          }
          if (c.expected_edges > best_edges) {
            best_edges = c.expected_edges;
            best = c.name + "=" + std::to_string(c.expected_edges);
          }
        }
        const auto kl = bp::kostochka_luo_bound(nn, r, k);
        csv << nn << ',' << r << ',' << k << ',' << exact_cell << ',' << formula_cell << ','
            << regime_cell << ',' << best << ',' << (kl ? kl->to_string() : "n/a") << '\n';
      }
      std::cout << csv.str();
      if (!failures.empty()) throw PostconditionFailure("construction failures:\n" + failures);
    }
  } catch (const PostconditionFailure& e) {
    std::cerr << "postcondition failure: " << e.what() << '\n';
    return kExitPostcondition;
  } catch (const bp::ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const bp::LimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
