#pragma once

#include <optional>
#include <string>

#include "bergepath/berge.hpp"
#include "bergepath/hypergraph.hpp"

namespace bergepath {

// Sparse-neighborhood sets in connected BP-free hypergraphs whose longest
// Berge path has length t and which carry no Berge cycle of length t:
// either some S with |S| = 2r-2 meets at most m+1 instances, or some S with
// |S| >= 2r-1 meets at most t instances.

enum class SparseVerdict { witness_found, precondition_violated, counterexample };
enum class SparseCase { size_2r_minus_2, size_ge_2r_minus_1 };

std::string to_string(SparseVerdict verdict);
std::string to_string(SparseCase c);

struct SparseSetReport {
  SparseVerdict verdict = SparseVerdict::counterexample;
  VertexSet set;
  std::optional<SparseCase> which;
  int neighborhood_size = 0;
  int longest_path = 0;  // t
  /// Failed precondition, when verdict == precondition_violated.
  std::string violated;
  /// Constructive only: "claim" or "recursion".
  std::string branch;
  /// Longest path the constructive procedure started from.
  std::optional<BergeWitness> path;
};

/// Which case S satisfies, if any: |S| >= 2r-2 with |N(S)| <= m+1 is
/// size_2r_minus_2, else |S| >= 2r-1 with |N(S)| <= t is size_ge_2r_minus_1.
std::optional<SparseCase> sparse_set_case(const Hypergraph& h, VertexSet s, int m, int t);

/// Preconditions checked in order: connected, n > r, multiplicity <= m,
/// 2 <= t <= r-1, no Berge cycle of length t. Then scans all subsets of size
/// 2r-2 and, failing that, of size 2r-1 (neighborhoods are monotone, so
/// larger sets cannot help) for the smallest neighborhood, lexicographically
/// first among ties.
SparseSetReport find_sparse_set(const Hypergraph& h, int m);

/// Builds S from the lexicographically least longest Berge path by the
/// end-edge argument: when e1 and et meet U only in their runs of repeated
/// edges, S is (e1 + et) minus two run endpoints, plus one interior vertex
/// per side that reaches an interior edge; otherwise S grows from
/// (e1 + et) \ U by the non-path parts of the edges whose interior vertices
/// e1 and et contain. The result is validated with sparse_set_case.
SparseSetReport build_sparse_set(const Hypergraph& h, int m);

}  // namespace bergepath
