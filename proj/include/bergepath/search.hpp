#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "bergepath/hypergraph.hpp"
#include "bergepath/rational.hpp"

namespace bergepath {

enum class Forbidden { path, cycle_exact, cycle_at_least };

/// The forbidden family under test plus the multiplicity cap (1 = simple).
struct FamilySpec {
  Forbidden forbidden = Forbidden::path;
  int k = 3;
  int multiplicity_cap = 1;

  static FamilySpec berge_path(int k, int cap = 1) { return {Forbidden::path, k, cap}; }
  static FamilySpec berge_cycle(int k, int cap = 1) { return {Forbidden::cycle_exact, k, cap}; }
  static FamilySpec berge_cycle_at_least(int k, int cap = 1) {
    return {Forbidden::cycle_at_least, k, cap};
  }

  /// True iff h contains a member of the family.
  bool contained_in(const Hypergraph& h) const;
  std::string to_string() const;
};

struct SearchOptions {
  int workers = 1;
  std::size_t witness_cap = 10;
  /// Upper limit on candidate instances m * C(n, r).
  std::int64_t max_candidates = 256;
  int max_order = 12;
  /// Stop expanding levels past floor(Kostochka-Luo bound); only valid for
  /// BP_k with 3 <= k <= r and off by default.
  bool bound_pruning = false;
  /// Written after every completed level; resumed from when present.
  std::optional<std::filesystem::path> checkpoint;
};

enum class SearchStatus { value, infeasible };

struct SearchOutcome {
  SearchStatus status = SearchStatus::infeasible;
  int value = 0;
  /// Canonical texts of extremal hypergraphs, sorted, at most witness_cap.
  std::vector<std::string> witnesses;
  std::uint64_t nodes_explored = 0;
  double elapsed_ms = 0;
};

/// Exact ex^conn_r(n, F) by level-wise generation of isomorphism classes.
///
/// Level j holds the canonical forms of all F-free hypergraphs with j
/// instances whose non-isolated part is connected; level j+1 adds one
/// instance meeting the current support (any instance when j = 0). Every
/// connected hypergraph has such a build order and F-freeness is inherited
/// by subhypergraphs, so the spanning members of the levels are exactly the
/// connected F-free hypergraphs on n vertices. Throws LimitError/ParameterError.
SearchOutcome exact_ex_conn(int n, int r, const FamilySpec& spec, const SearchOptions& options = {});

/// All connected F-free hypergraphs on n vertices up to isomorphism,
/// canonical, ordered by (edge count, canonical text).
std::vector<Hypergraph> enumerate_connected(int n, int r, const FamilySpec& spec,
                                            const SearchOptions& options = {});

enum class ConjectureStatus { match, exact_exceeds, exact_below };
std::string to_string(ConjectureStatus status);

struct ConjectureReport {
  int n = 0, r = 0, k = 0;
  Rational conjectured;
  SearchOutcome exact;
  std::int64_t construction_edges = 0;
  bool construction_verified = false;
  ConjectureStatus status = ConjectureStatus::match;
};

/// Compares the exact value with the complete-core conjecture value and
/// construction. Requires r+1 <= k <= 2r-1 and n >= k-1.
ConjectureReport conjecture_check(int n, int r, int k, const SearchOptions& options = {});

}  // namespace bergepath
