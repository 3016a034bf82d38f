#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace bergepath {

/// Raised when an operation is called outside its parameter range.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exact procedure would exceed its configured size limit.
class LimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Largest vertex count a Hypergraph can hold (one machine word per set).
inline constexpr int kMaxVertices = 64;

/// Subset of 0..n-1 with word-level union/intersection.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet from(const std::vector<int>& vertices) {
    VertexSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }

  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  /// Smallest element; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  std::vector<int> to_vector() const;
  std::string to_string() const;

  constexpr bool operator==(const VertexSet&) const = default;
  constexpr auto operator<=>(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order of the sorted vertex lists of two sets.
bool lex_less(VertexSet a, VertexSet b);

/// An n-vertex r-uniform multi-hypergraph.
///
/// Edge instances are kept in canonical order (sorted vertex lists,
/// lexicographic); a vertex set of multiplicity m appears as m consecutive
/// instances. Instance ids are positions in that order. Values are immutable
/// once built.
class Hypergraph {
 public:
  /// Empty 0-vertex 2-uniform hypergraph.
  Hypergraph() = default;

  /// Throws ParameterError on r < 2, n out of range, an edge of the wrong
  /// size, repeated vertices, or an id >= n.
  static Hypergraph build(int n, int r, const std::vector<std::vector<int>>& edge_lists);
  static Hypergraph build(int n, int r, const std::vector<VertexSet>& edges);

  int order() const { return n_; }
  int uniformity() const { return r_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  VertexSet edge(std::size_t id) const { return edges_.at(id); }
  VertexSet vertices() const { return VertexSet::full(n_); }

  /// Union of all edge instances.
  VertexSet support() const;
  /// Number of instances sharing the vertex set of instance `id`.
  int multiplicity(std::size_t id) const;
  int max_multiplicity() const;
  int multiplicity_of(VertexSet edge) const;
  int degree(int v) const;

  /// Instance order preserved; for serialization and tests.
  std::vector<std::vector<int>> edge_lists() const;

  /// Same vertex count and uniformity plus one more instance of `edge`.
  Hypergraph with_edge(VertexSet edge) const;
  /// Drops instance `id`.
  Hypergraph without_instance(std::size_t id) const;
  /// Vertex v is renamed to perm[v]; perm must be a permutation of 0..n-1.
  Hypergraph relabeled(const std::vector<int>& perm) const;

  bool operator==(const Hypergraph&) const = default;

 private:
  Hypergraph(int n, int r, std::vector<VertexSet> edges);

  int n_ = 0;
  int r_ = 2;
  std::vector<VertexSet> edges_;
};

/// True iff every vertex lies on an edge and the vertex-edge incidence
/// structure is connected. The single vertex with no edges counts as
/// connected; any other hypergraph with an isolated vertex does not.
bool is_connected(const Hypergraph& h);

/// Instance ids of the edges meeting `s`, ascending.
std::vector<std::size_t> hyperedge_neighborhood(const Hypergraph& h, VertexSet s);

struct InducedSubhypergraph {
  Hypergraph hypergraph;
  /// original[i] is the vertex of the parent that became vertex i.
  std::vector<int> original;
};

/// Keeps the instances contained in `w`; vertices are renumbered 0..|w|-1
/// in increasing order.
InducedSubhypergraph induced_subhypergraph(const Hypergraph& h, VertexSet w);

}  // namespace bergepath
