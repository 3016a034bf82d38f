#include "bergepath/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "bergepath/rational.hpp"

namespace bergepath {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

VertexSet range(int first, int count) {
  VertexSet s;
  for (int i = 0; i < count; ++i) s.insert(first + i);
  return s;
}

// `count` distinct edges {hub} + (r-1)-subset of `pool` whose union covers
// the pool: the first and last window of the pool, then further subsets in
// lexicographic order. With allow_repeat the first window is reused once
// distinct subsets run out.
std::vector<VertexSet> covering_hub_edges(int hub, const std::vector<int>& pool, int count,
                                          int r, bool allow_repeat) {
  const int width = r - 1;
  const int size = static_cast<int>(pool.size());
  require(size >= width, "block too small for an edge");
  require(size <= 2 * width || count == 0, "block cannot be covered");
  auto window = [&](int first) {
    VertexSet e{hub};
    for (int i = 0; i < width; ++i) e.insert(pool[first + i]);
    return e;
  };
  std::vector<VertexSet> out;
  if (count == 0) return out;
  out.push_back(window(0));
  if (size > width) {
    require(count >= 2, "block needs at least two edges to cover its vertices");
    out.push_back(window(size - width));
  }
  std::vector<int> idx(width);
  std::iota(idx.begin(), idx.end(), 0);
  while (static_cast<int>(out.size()) < count) {
    VertexSet e{hub};
    for (int i : idx) e.insert(pool[i]);
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    // next combination
    int i = width - 1;
    while (i >= 0 && idx[i] == size - width + i) --i;
    if (i < 0) {
      require(allow_repeat, "block has fewer distinct edges than required");
      while (static_cast<int>(out.size()) < count) out.push_back(window(0));
      break;
    }
    ++idx[i];
    for (int j = i + 1; j < width; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<int> take(int first, int count) {
  std::vector<int> v(count);
  std::iota(v.begin(), v.end(), first);
  return v;
}

// Cycle positions 0, 2, 4, ... of a cycle of length len; pairwise non-adjacent.
VertexSet alternate_cycle_vertices(int len) {
  VertexSet s;
  for (int i = 0; i < len / 2; ++i) s.insert(2 * i);
  return s;
}

}  // namespace

Hypergraph k3_family(int n, int r, K3Variant variant) {
  require(r >= 3, "k=3 families require r >= 3");
  std::vector<VertexSet> edges;
  if (variant == K3Variant::star) {
    require(n >= 2 * r - 1, "star requires n >= 2r-1");
    require((n - 1) % (r - 1) == 0, "star requires (r-1) | (n-1)");
    for (int first = 1; first < n; first += r - 1) edges.push_back(range(first, r - 1) | VertexSet{0});
  } else {
    require(n >= r + 1 && n <= 2 * r - 2, "double edge requires r+1 <= n <= 2r-2");
    edges.push_back(range(0, r));
    edges.push_back(range(0, 2 * r - n) | range(r, n - r));
  }
  return Hypergraph::build(n, r, edges);
}

Hypergraph k4_family(int n, int r, K4Variant variant) {
  require(r >= 4, "k=4 families require r >= 4");
  const VertexSet a = range(0, r - 2);
  const int v1 = r - 2, v2 = r - 1, v3 = r, v4 = r + 1;
  std::vector<VertexSet> edges{a | VertexSet{v1, v2}, a | VertexSet{v2, v3}, a | VertexSet{v3, v4}};
  switch (variant) {
    case K4Variant::small: {
      require(n >= r + 2 && n <= r + 4, "k4 small requires r+2 <= n <= r+4");
      const int extra = n - (r + 2);
      edges.push_back(range(0, r - 2 - extra) | VertexSet{v1, v4} | range(r + 2, extra));
      break;
    }
    case K4Variant::h1:
      require(n >= r + 5, "k4 h1 requires n >= r+5");
      require((n - 4) % (r - 2) == 0, "k4 h1 requires (r-2) | (n-4)");
      for (int first = r + 2; first < n; first += r - 2)
        edges.push_back(range(first, r - 2) | VertexSet{v2, v3});
      break;
    case K4Variant::h2:
      require(n >= r + 5, "k4 h2 requires n >= r+5");
      require((n - 5) % (r - 1) == 0, "k4 h2 requires (r-1) | (n-5)");
      edges.push_back(a | VertexSet{r + 2, r + 3});
      for (int first = r + 4; first < n; first += r - 1)
        edges.push_back(range(first, r - 1) | VertexSet{v3});
      break;
  }
  return Hypergraph::build(n, r, edges);
}

std::int64_t hub_blocks_edges(int n, int r, int k) {
  return static_cast<std::int64_t>((k - 1) / 2) * ((n - 1) / r) + (k % 2 == 0 ? 1 : 0);
}

Hypergraph hub_blocks(int n, int r, int k) {
  require(r >= k && k >= 5, "hub blocks require r >= k >= 5");
  require(n >= r + 1, "hub blocks require n >= r+1");
  require(n % r != 0, "hub blocks require n not a multiple of r");
  const int a = (n - 1) / r;
  const int b = (n - 1) % r;
  const int small = (k - 1) / 2;
  const int large = k / 2;  // ceil((k-1)/2)
  std::vector<VertexSet> edges;
  int next = 1;
  for (int block = 0; block + 1 < a; ++block) {
    const VertexSet w = range(next, r) | VertexSet{0};
    for (int j = 0; j < small; ++j) {
      VertexSet e = w;
      e.erase(next + j);
      edges.push_back(e);
    }
    next += r;
  }
  for (VertexSet e : covering_hub_edges(0, take(next, r + b), large, r, false)) edges.push_back(e);
  return Hypergraph::build(n, r, edges);
}

int cycle_hub_base_order(int r, int k) { return (k - 1) + (k - 1) * (r - 2); }

std::int64_t cycle_hub_edges(int n, int r, int k) {
  return (k - 1) + (n - cycle_hub_base_order(r, k)) / (r - (k - 1) / 2);
}

Hypergraph cycle_hub(int n, int r, int k) {
  require(r >= k && k >= 5, "cycle hub requires r >= k >= 5");
  const int len = k - 1;
  const int base = cycle_hub_base_order(r, k);
  const VertexSet shared = alternate_cycle_vertices(len);
  const int fresh = r - shared.size();
  require(n >= base, "cycle hub requires n >= (k-1)(r-1)");
  require((n - base) % fresh == 0, "cycle hub requires (n - (k-1)(r-1)) divisible by r - floor((k-1)/2)");
  std::vector<VertexSet> edges;
  int next = len;
  for (int i = 0; i < len; ++i) {
    edges.push_back(VertexSet{i, (i + 1) % len} | range(next, r - 2));
    next += r - 2;
  }
  for (; next < n; next += fresh) edges.push_back(shared | range(next, fresh));
  return Hypergraph::build(n, r, edges);
}

Hypergraph sunflower(int n, int r) {
  require(n >= r + 1, "sunflower requires n >= r+1");
  const VertexSet core = range(0, r - 1);
  std::vector<VertexSet> edges;
  for (int i = r - 1; i < n; ++i) edges.push_back(core | VertexSet{i});
  return Hypergraph::build(n, r, edges);
}

Hypergraph complete_core(int n, int r, int k) {
  require(k >= r + 1 && k <= 2 * r - 1, "complete core requires r+1 <= k <= 2r-1");
  require(n >= k - 1, "complete core requires n >= k-1");
  const int s = k - 2;
  std::vector<VertexSet> edges;
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  if (s >= r) {
    while (true) {
      edges.push_back(VertexSet::from(idx));
      int i = r - 1;
      while (i >= 0 && idx[i] == s - r + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  const VertexSet anchor = range(0, r - 1);
  for (int v = s; v < n; ++v) edges.push_back(anchor | VertexSet{v});
  return Hypergraph::build(n, r, edges);
}

std::int64_t multi_family_edges(int n, int r, int k, MultiVariant variant) {
  if (variant == MultiVariant::multi_star)
    return static_cast<std::int64_t>((n - 1) / (r - 1)) * ((k - 1) / 2) + (k % 2 == 0 ? 1 : 0);
  return (k - 1) + (n - r) / (r - (k - 1) / 2);
}

Hypergraph multi_family(int n, int r, int k, MultiVariant variant) {
  require(n >= r && r >= k && k >= 3, "multi families require n >= r >= k >= 3");
  std::vector<VertexSet> edges;
  if (variant == MultiVariant::multi_star) {
    const int a = (n - 1) / (r - 1);
    const int b = (n - 1) % (r - 1);
    require(a >= 2, "multi star requires n >= 2r-1");
    require(n % (r - 1) != 0, "multi star requires n not a multiple of r-1");
    const int small = (k - 1) / 2;
    const int large = k / 2;
    int next = 1;
    for (int block = 0; block + 1 < a; ++block) {
      const VertexSet e = range(next, r - 1) | VertexSet{0};
      for (int j = 0; j < small; ++j) edges.push_back(e);
      next += r - 1;
    }
    for (VertexSet e : covering_hub_edges(0, take(next, r - 1 + b), large, r, true))
      edges.push_back(e);
  } else {
    require(r > k, "multi cycle hub requires r > k");
    const VertexSet shared = alternate_cycle_vertices(k - 1);
    const int fresh = r - shared.size();
    require((n - r) % fresh == 0, "multi cycle hub requires (n-r) divisible by r - floor((k-1)/2)");
    for (int j = 0; j < k - 1; ++j) edges.push_back(range(0, r));
    for (int next = r; next < n; next += fresh) edges.push_back(shared | range(next, fresh));
  }
  return Hypergraph::build(n, r, edges);
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{
      "star",  "double-edge", "k4-small",      "k4-h1",      "k4-h2",          "hub",
      "cycle-hub", "sunflower", "complete-core", "multi-star", "multi-cycle-hub"};
  return names;
}

NamedConstruction construct_by_name(const std::string& family, int n, int r, int k) {
  NamedConstruction out;
  out.name = family;
  if (family == "star" || family == "double-edge") {
    out.k = 3;
    out.hypergraph = k3_family(n, r, family == "star" ? K3Variant::star : K3Variant::double_edge);
    out.expected_edges = family == "star" ? (n - 1) / (r - 1) : 2;
  } else if (family == "k4-small" || family == "k4-h1" || family == "k4-h2") {
    out.k = 4;
    const K4Variant v = family == "k4-small" ? K4Variant::small
                        : family == "k4-h1"  ? K4Variant::h1
                                             : K4Variant::h2;
    out.hypergraph = k4_family(n, r, v);
    out.expected_edges = v == K4Variant::small ? 4
                         : v == K4Variant::h1  ? (n - 4) / (r - 2) + 2
                                               : (n - 5) / (r - 1) + 3;
  } else if (family == "hub") {
    out.k = k;
    out.hypergraph = hub_blocks(n, r, k);
    out.expected_edges = hub_blocks_edges(n, r, k);
  } else if (family == "cycle-hub") {
    out.k = k;
    out.hypergraph = cycle_hub(n, r, k);
    out.expected_edges = cycle_hub_edges(n, r, k);
  } else if (family == "sunflower") {
    out.k = r + 1;
    out.hypergraph = sunflower(n, r);
    out.expected_edges = n - r + 1;
  } else if (family == "complete-core") {
    out.k = k;
    out.hypergraph = complete_core(n, r, k);
    out.expected_edges = n - (k - 2) + binom(k - 2, r);
  } else if (family == "multi-star" || family == "multi-cycle-hub") {
    out.k = k;
    const MultiVariant v =
        family == "multi-star" ? MultiVariant::multi_star : MultiVariant::multi_cycle_hub;
    out.hypergraph = multi_family(n, r, k, v);
    out.expected_edges = multi_family_edges(n, r, k, v);
  } else {
    throw ParameterError("unknown family '" + family + "'");
  }
  return out;
}

std::vector<NamedConstruction> applicable_constructions(int n, int r, int k) {
  std::vector<NamedConstruction> out;
  for (const auto& name : family_names()) {
    if (name.rfind("multi", 0) == 0) continue;
    try {
      auto c = construct_by_name(name, n, r, k);
      if (c.k == k) out.push_back(std::move(c));
    } catch (const ParameterError&) {
    }
  }
  return out;
}

}  // namespace bergepath
