#include "bergepath/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bergepath {

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : to_vector()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

bool lex_less(VertexSet a, VertexSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const int x = std::countr_zero(diff);
  // Past the first differing element x, the set lacking x either continues
  // with something larger (and then the set holding x is smaller) or ends.
  if (a.contains(x)) return (b.bits() >> x) != 0;
  return (a.bits() >> x) == 0;
}

Hypergraph::Hypergraph(int n, int r, std::vector<VertexSet> edges)
    : n_(n), r_(r), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end(), lex_less);
}

Hypergraph Hypergraph::build(int n, int r, const std::vector<VertexSet>& edges) {
  if (r < 2) throw ParameterError("uniformity r must be at least 2");
  if (n < 0 || n > kMaxVertices)
    throw ParameterError("vertex count must lie in 0.." + std::to_string(kMaxVertices));
  const VertexSet all = VertexSet::full(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!edges[i].subset_of(all))
      throw ParameterError("edge " + std::to_string(i) + ": vertex id out of range");
    if (edges[i].size() != r)
      throw ParameterError("edge " + std::to_string(i) + ": wrong edge size " +
                           std::to_string(edges[i].size()) + " (expected " +
                           std::to_string(r) + ")");
  }
  return Hypergraph(n, r, edges);
}

Hypergraph Hypergraph::build(int n, int r, const std::vector<std::vector<int>>& edge_lists) {
  if (r < 2) throw ParameterError("uniformity r must be at least 2");
  if (n < 0 || n > kMaxVertices)
    throw ParameterError("vertex count must lie in 0.." + std::to_string(kMaxVertices));
  std::vector<VertexSet> edges;
  edges.reserve(edge_lists.size());
  for (std::size_t i = 0; i < edge_lists.size(); ++i) {
    const auto& list = edge_lists[i];
    if (static_cast<int>(list.size()) != r)
      throw ParameterError("edge " + std::to_string(i) + ": wrong edge size " +
                           std::to_string(list.size()) + " (expected " + std::to_string(r) +
                           ")");
    VertexSet e;
    for (int v : list) {
      if (v < 0 || v >= n)
        throw ParameterError("edge " + std::to_string(i) + ": vertex id " + std::to_string(v) +
                             " out of range");
      if (e.contains(v))
        throw ParameterError("edge " + std::to_string(i) + ": repeated vertex " +
                             std::to_string(v));
      e.insert(v);
    }
    edges.push_back(e);
  }
  return Hypergraph(n, r, std::move(edges));
}

VertexSet Hypergraph::support() const {
  VertexSet s;
  for (VertexSet e : edges_) s |= e;
  return s;
}

int Hypergraph::multiplicity(std::size_t id) const { return multiplicity_of(edges_.at(id)); }

int Hypergraph::multiplicity_of(VertexSet edge) const {
  return static_cast<int>(std::count(edges_.begin(), edges_.end(), edge));
}

int Hypergraph::max_multiplicity() const {
  int best = 0;
  // Instances of one vertex set are adjacent in canonical order.
  for (std::size_t i = 0; i < edges_.size();) {
    std::size_t j = i;
    while (j < edges_.size() && edges_[j] == edges_[i]) ++j;
    best = std::max(best, static_cast<int>(j - i));
    i = j;
  }
  return best;
}

int Hypergraph::degree(int v) const {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [v](VertexSet e) { return e.contains(v); }));
}

std::vector<std::vector<int>> Hypergraph::edge_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(edges_.size());
  for (VertexSet e : edges_) out.push_back(e.to_vector());
  return out;
}

Hypergraph Hypergraph::with_edge(VertexSet edge) const {
  if (edge.size() != r_ || !edge.subset_of(vertices()))
    throw ParameterError("with_edge: edge is not an r-subset of the vertex set");
  auto edges = edges_;
  edges.insert(std::upper_bound(edges.begin(), edges.end(), edge, lex_less), edge);
  Hypergraph h;
  h.n_ = n_;
  h.r_ = r_;
  h.edges_ = std::move(edges);
  return h;
}

Hypergraph Hypergraph::without_instance(std::size_t id) const {
  auto edges = edges_;
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(id));
  return Hypergraph(n_, r_, std::move(edges));
}

Hypergraph Hypergraph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw ParameterError("relabel: permutation size");
  std::vector<VertexSet> edges;
  edges.reserve(edges_.size());
  for (VertexSet e : edges_) {
    VertexSet m;
    for (int v : e.to_vector()) m.insert(perm[v]);
    edges.push_back(m);
  }
  return Hypergraph(n_, r_, std::move(edges));
}

bool is_connected(const Hypergraph& h) {
  const int n = h.order();
  if (h.size() == 0) return n == 1;
  const VertexSet all = h.vertices();
  if (h.support() != all) return false;
  VertexSet reached = h.edge(0);
  std::vector<bool> used(h.size(), false);
  used[0] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (!used[i] && h.edge(i).intersects(reached)) {
        used[i] = true;
        reached |= h.edge(i);
        grew = true;
      }
    }
  }
  return reached == all;
}

std::vector<std::size_t> hyperedge_neighborhood(const Hypergraph& h, VertexSet s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h.edge(i).intersects(s)) out.push_back(i);
  return out;
}

InducedSubhypergraph induced_subhypergraph(const Hypergraph& h, VertexSet w) {
  w &= h.vertices();
  InducedSubhypergraph out{Hypergraph::build(w.size(), h.uniformity(), std::vector<VertexSet>{}),
                           w.to_vector()};
  std::vector<int> index(h.order(), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i) index[out.original[i]] = static_cast<int>(i);
  std::vector<VertexSet> edges;
  for (VertexSet e : h.edges()) {
    if (!e.subset_of(w)) continue;
    VertexSet m;
    for (int v : e.to_vector()) m.insert(index[v]);
    edges.push_back(m);
  }
  out.hypergraph = Hypergraph::build(w.size(), h.uniformity(), edges);
  return out;
}

}  // namespace bergepath
