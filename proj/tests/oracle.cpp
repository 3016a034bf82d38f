#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace oracle {
namespace {

bool in_edge(const std::vector<int>& e, int v) { return std::find(e.begin(), e.end(), v) != e.end(); }

// Distinct instances for the given consecutive pairs, by plain backtracking.
bool assign(const Edges& edges, const std::vector<std::pair<int, int>>& pairs, std::size_t i,
            std::vector<bool>& used) {
  if (i == pairs.size()) return true;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (used[e] || !in_edge(edges[e], pairs[i].first) || !in_edge(edges[e], pairs[i].second))
      continue;
    used[e] = true;
    if (assign(edges, pairs, i + 1, used)) return true;
    used[e] = false;
  }
  return false;
}

// Calls f on every sequence of `len` distinct vertices until it returns true.
bool any_sequence(int n, int len, const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> seq;
  std::vector<bool> taken(n, false);
  std::function<bool()> rec = [&]() -> bool {
    if (static_cast<int>(seq.size()) == len) return f(seq);
    for (int v = 0; v < n; ++v) {
      if (taken[v]) continue;
      taken[v] = true;
      seq.push_back(v);
      const bool hit = rec();
      seq.pop_back();
      taken[v] = false;
      if (hit) return true;
    }
    return false;
  };
  return rec();
}

std::string encode(Edges edges) {
  for (auto& e : edges) std::sort(e.begin(), e.end());
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  for (const auto& e : edges) {
    for (int v : e) out << v << '.';
    out << '/';
  }
  return out.str();
}

}  // namespace

bool connected(int n, const Edges& edges) {
  if (edges.empty()) return n == 1;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& e : edges)
    for (int v : e) parent[find(v)] = find(e[0]);
  for (int v = 0; v < n; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

bool has_path(int n, const Edges& edges, int k) {
  if (k + 1 > n || k > static_cast<int>(edges.size())) return false;
  return any_sequence(n, k + 1, [&](const std::vector<int>& seq) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i) pairs.emplace_back(seq[i], seq[i + 1]);
    std::vector<bool> used(edges.size(), false);
    return assign(edges, pairs, 0, used);
  });
}

bool has_cycle(int n, const Edges& edges, int k) {
  if (k > n || k > static_cast<int>(edges.size())) return false;
  return any_sequence(n, k, [&](const std::vector<int>& seq) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i) pairs.emplace_back(seq[i], seq[(i + 1) % k]);
    std::vector<bool> used(edges.size(), false);
    return assign(edges, pairs, 0, used);
  });
}

bool has_cycle_at_least(int n, const Edges& edges, int k) {
  for (int len = k; len <= n; ++len)
    if (has_cycle(n, edges, len)) return true;
  return false;
}

int longest_path(int n, const Edges& edges) {
  int best = 0;
  while (has_path(n, edges, best + 1)) ++best;
  return best;
}

bool graph_has_path(int n, const Edges& edges, int k) {
  // Simple path with distinct edge indices; distinct vertices force distinct edges.
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  std::vector<bool> seen(n, false);
  std::function<bool(int, int)> dfs = [&](int v, int len) {
    if (len == k) return true;
    for (int w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      if (dfs(w, len + 1)) return true;
      seen[w] = false;
    }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    std::fill(seen.begin(), seen.end(), false);
    seen[s] = true;
    if (dfs(s, 0)) return true;
  }
  return false;
}

bool graph_has_cycle(int n, const Edges& edges, int k) {
  if (k == 2) {
    std::multiset<std::pair<int, int>> seen;
    for (const auto& e : edges) {
      const auto key = std::minmax(e[0], e[1]);
      if (seen.count(key)) return true;
      seen.insert(key);
    }
    return false;
  }
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& e : edges) adj[e[0]][e[1]] = adj[e[1]][e[0]] = true;
  std::vector<bool> seen(n, false);
  std::function<bool(int, int, int)> dfs = [&](int start, int v, int len) {
    if (len == k - 1) return static_cast<bool>(adj[v][start]);
    for (int w = 0; w < n; ++w) {
      if (seen[w] || !adj[v][w]) continue;
      seen[w] = true;
      if (dfs(start, w, len + 1)) return true;
      seen[w] = false;
    }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    std::fill(seen.begin(), seen.end(), false);
    seen[s] = true;
    if (dfs(s, s, 0)) return true;
  }
  return false;
}

std::string canonical(int n, const Edges& edges) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  bool first = true;
  do {
    Edges relabeled = edges;
    for (auto& e : relabeled)
      for (int& v : e) v = perm[v];
    auto code = encode(std::move(relabeled));
    if (first || code < best) {
      best = std::move(code);
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

std::vector<std::vector<int>> all_subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v < n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

bool sparse_set_exists(int n, int r, const Edges& edges, int m, int t) {
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    const int size = __builtin_popcount(mask);
    int meets = 0;
    for (const auto& e : edges)
      meets += std::any_of(e.begin(), e.end(), [&](int v) { return mask >> v & 1; });
    if (size >= 2 * r - 2 && meets <= m + 1) return true;
    if (size >= 2 * r - 1 && meets <= t) return true;
  }
  return false;
}

int ex_conn_path(int n, int r, int k) {
  const auto cands = all_subsets(n, r);
  int best = -1;
  if (n == 1) best = 0;
  const std::size_t total = std::size_t{1} << cands.size();
  for (std::size_t mask = 1; mask < total; ++mask) {
    const int size = __builtin_popcountll(mask);
    if (size <= best) continue;
    Edges edges;
    for (std::size_t i = 0; i < cands.size(); ++i)
      if (mask >> i & 1) edges.push_back(cands[i]);
    if (connected(n, edges) && !has_path(n, edges, k)) best = size;
  }
  return best;
}

int count_connected_free(int n, int r, int k) {
  const auto cands = all_subsets(n, r);
  std::set<std::string> classes;
  if (n == 1) classes.insert("empty");
  const std::size_t total = std::size_t{1} << cands.size();
  for (std::size_t mask = 1; mask < total; ++mask) {
    Edges edges;
    for (std::size_t i = 0; i < cands.size(); ++i)
      if (mask >> i & 1) edges.push_back(cands[i]);
    if (connected(n, edges) && !has_path(n, edges, k)) classes.insert(canonical(n, edges));
  }
  return static_cast<int>(classes.size());
}

Edges random_edges(std::mt19937& rng, int n, int r, int m, bool allow_repeats) {
  auto cands = all_subsets(n, r);
  Edges out;
  if (allow_repeats) {
    std::uniform_int_distribution<std::size_t> pick(0, cands.size() - 1);
    for (int i = 0; i < m; ++i) out.push_back(cands[pick(rng)]);
  } else {
    std::shuffle(cands.begin(), cands.end(), rng);
    for (int i = 0; i < m && i < static_cast<int>(cands.size()); ++i) out.push_back(cands[i]);
  }
  return out;
}

}  // namespace oracle
