#include "bergepath/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bergepath {
namespace {

class Canonizer {
 public:
  explicit Canonizer(const Hypergraph& h) : h_(h), n_(h.order()), incident_(h.order()) {
    for (std::size_t i = 0; i < h.size(); ++i)
      for (int v : h.edge(i).to_vector()) incident_[v].push_back(static_cast<int>(i));

    // Vertices with identical incident instance lists are exchangeable.
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return incident_[a] < incident_[b]; });
    twin_.assign(n_, 0);
    int cls = 0;
    for (int i = 0; i < n_; ++i) {
      if (i > 0 && incident_[order[i]] != incident_[order[i - 1]]) ++cls;
      twin_[order[i]] = cls;
    }
  }

  void run() {
    std::vector<int> prefix;
    descend(std::vector<int>(n_, 0), prefix);
  }

  const std::vector<int>& best_labels() const { return best_labels_; }

 private:
  using Key = std::pair<int, std::vector<std::vector<int>>>;

  // Equitable refinement: a vertex's new color is the rank of (old color,
  // multiset of color-multisets of its incident instances).
  void refine(std::vector<int>& col) const {
    int classes = count_classes(col);
    while (true) {
      std::vector<Key> keys(n_);
      for (int v = 0; v < n_; ++v) {
        keys[v].first = col[v];
        for (int inst : incident_[v]) {
          std::vector<int> cs;
          for (int u : h_.edge(inst).to_vector()) cs.push_back(col[u]);
          std::sort(cs.begin(), cs.end());
          keys[v].second.push_back(std::move(cs));
        }
        std::sort(keys[v].second.begin(), keys[v].second.end());
      }
      std::vector<int> order(n_);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
      std::vector<int> next(n_);
      int rank = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && keys[order[i]] != keys[order[i - 1]]) ++rank;
        next[order[i]] = rank;
      }
      col = std::move(next);
      const int now = n_ == 0 ? 0 : rank + 1;
      if (now == classes) return;
      classes = now;
    }
  }

  static int count_classes(const std::vector<int>& col) {
    std::vector<int> c = col;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  std::vector<int> encode(const std::vector<int>& labels) const {
    std::vector<std::vector<int>> edges;
    edges.reserve(h_.size());
    for (VertexSet e : h_.edges()) {
      std::vector<int> m;
      for (int v : e.to_vector()) m.push_back(labels[v]);
      std::sort(m.begin(), m.end());
      edges.push_back(std::move(m));
    }
    std::sort(edges.begin(), edges.end());
    std::vector<int> flat;
    for (const auto& e : edges) flat.insert(flat.end(), e.begin(), e.end());
    return flat;
  }

  // Labels at a leaf are a permutation; equal codes at two leaves give the
  // automorphism mapping each vertex to the one carrying its label in the other.
  void record_automorphism(const std::vector<int>& labels, const std::vector<int>& other) {
    std::vector<int> inverse(n_);
    for (int v = 0; v < n_; ++v) inverse[other[v]] = v;
    std::vector<int> gamma(n_);
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      gamma[v] = inverse[labels[v]];
      identity &= gamma[v] == v;
    }
    if (!identity) automorphisms_.push_back(std::move(gamma));
  }

  // Orbit representatives under the automorphisms found so far that fix
  // every vertex of `prefix`.
  std::vector<int> orbits(const std::vector<int>& prefix) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      if (!std::all_of(prefix.begin(), prefix.end(), [&](int p) { return gamma[p] == p; })) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(v), b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void descend(std::vector<int> col, std::vector<int>& prefix) {
    refine(col);
    int target = -1;
    std::vector<int> cell_size(n_, 0);
    for (int c : col) ++cell_size[c];
    for (int c = 0; c < n_; ++c) {
      if (cell_size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      auto code = encode(col);
      if (first_labels_.empty()) {
        first_code_ = code;
        first_labels_ = col;
      } else if (code == first_code_) {
        record_automorphism(col, first_labels_);
      }
      if (best_labels_.empty() || code < best_code_) {
        best_code_ = std::move(code);
        best_labels_ = col;
      } else if (code == best_code_) {
        record_automorphism(col, best_labels_);
      }
      return;
    }
    std::vector<bool> tried_twin(n_, false);
    std::vector<int> tried;
    for (int v = 0; v < n_; ++v) {
      if (col[v] != target || tried_twin[twin_[v]]) continue;
      if (!tried.empty()) {
        const auto orbit = orbits(prefix);
        if (std::any_of(tried.begin(), tried.end(), [&](int w) { return orbit[w] == orbit[v]; }))
          continue;
      }
      tried_twin[twin_[v]] = true;
      tried.push_back(v);
      std::vector<int> child(n_);
      for (int u = 0; u < n_; ++u) child[u] = 2 * col[u] + ((col[u] == target && u != v) ? 1 : 0);
      prefix.push_back(v);
      descend(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  const Hypergraph& h_;
  int n_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> twin_;
  std::vector<int> first_code_;
  std::vector<int> first_labels_;
  std::vector<int> best_code_;
  std::vector<int> best_labels_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

std::string encode_text(const Hypergraph& h) {
  std::ostringstream os;
  os << h.order() << ':' << h.uniformity() << ':';
  bool first_edge = true;
  for (VertexSet e : h.edges()) {
    if (!first_edge) os << '/';
    first_edge = false;
    bool first = true;
    for (int v : e.to_vector()) {
      if (!first) os << '.';
      os << v;
      first = false;
    }
  }
  return os.str();
}

CanonicalForm canonical_form(const Hypergraph& h, int limit) {
  if (h.order() > limit)
    throw LimitError("canonical_form: " + std::to_string(h.order()) +
                     " vertices exceeds the exact limit " + std::to_string(limit));
  CanonicalForm out;
  if (h.order() == 0) {
    out.hypergraph = h;
    out.text = encode_text(h);
    return out;
  }
  Canonizer c(h);
  c.run();
  out.relabel = c.best_labels();
  out.hypergraph = h.relabeled(out.relabel);
  out.text = encode_text(out.hypergraph);
  return out;
}

Hypergraph from_canonical_text(const std::string& text) {
  auto fail = [&](const std::string& why) {
    return ParameterError("malformed canonical text '" + text + "': " + why);
  };
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw fail("expected n:r:edges");
  int n = 0;
  int r = 0;
  try {
    n = std::stoi(text.substr(0, c1));
    r = std::stoi(text.substr(c1 + 1, c2 - c1 - 1));
  } catch (const std::exception&) {
    throw fail("bad header");
  }
  std::vector<std::vector<int>> edges;
  const std::string body = text.substr(c2 + 1);
  std::istringstream es(body);
  std::string edge;
  while (std::getline(es, edge, '/')) {
    std::vector<int> list;
    std::istringstream vs(edge);
    std::string tok;
    while (std::getline(vs, tok, '.')) {
      try {
        std::size_t used = 0;
        list.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw fail("bad vertex id");
      } catch (const std::invalid_argument&) {
        throw fail("bad vertex id");
      }
    }
    edges.push_back(std::move(list));
  }
  return Hypergraph::build(n, r, edges);
}

}  // namespace bergepath
