#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bergepath/hypergraph.hpp"

namespace bergepath {

enum class WitnessKind { path, cycle };

/// Defining vertices and defining edge instances of a Berge path or cycle.
///
/// A path of length k has k+1 vertices and k instances with
/// {vertices[i], vertices[i+1]} inside edge_instances[i]. A cycle of length k
/// has k vertices and k instances, indices taken modulo k.
struct BergeWitness {
  WitnessKind kind = WitnessKind::path;
  std::vector<int> vertices;
  std::vector<std::size_t> edge_instances;

  int length() const { return static_cast<int>(edge_instances.size()); }
  bool operator==(const BergeWitness&) const = default;
};

/// Checks every witness invariant against h. Throws std::out_of_range on an
/// instance id >= h.size().
bool verify_witness(const Hypergraph& h, const BergeWitness& w);

/// Berge path of length exactly k (k >= 1), or nullopt.
std::optional<BergeWitness> find_berge_path(const Hypergraph& h, int k);
bool contains_berge_path(const Hypergraph& h, int k);

enum class CycleMode { exact, at_least };

/// Berge cycle of length k (exact) or of some length >= k (at_least); k >= 2.
std::optional<BergeWitness> find_berge_cycle(const Hypergraph& h, int k,
                                             CycleMode mode = CycleMode::exact);
bool contains_berge_cycle(const Hypergraph& h, int k, CycleMode mode = CycleMode::exact);

struct LongestPath {
  int length = 0;
  std::optional<BergeWitness> witness;  // empty iff length == 0
};

/// Longest Berge path; the witness is the lexicographically least vertex
/// sequence of that length.
LongestPath longest_berge_path(const Hypergraph& h);

}  // namespace bergepath
