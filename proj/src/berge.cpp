#include "bergepath/berge.hpp"

#include <algorithm>
#include <stdexcept>

namespace bergepath {
namespace {

// Depth-first extension of a defining-vertex sequence. The consecutive pairs
// of the sequence must admit distinct representative instances; this is kept
// as a maximum bipartite matching (pairs vs. instances) extended by one
// augmenting path per step, so a prefix whose pairs violate Hall's condition
// is cut immediately and instance choice never branches.
class BergeSearch {
 public:
  explicit BergeSearch(const Hypergraph& h)
      : h_(h), n_(h.order()), m_(h.size()), pair_instances_(n_ * n_), neighbors_(n_) {
    for (std::size_t i = 0; i < m_; ++i) {
      const auto vs = h.edge(i).to_vector();
      for (int a : vs)
        for (int b : vs)
          if (a != b) {
            pair_instances_[a * n_ + b].push_back(static_cast<int>(i));
            neighbors_[a].insert(b);
          }
    }
  }

  // Mode of one search run.
  struct Goal {
    bool cycle = false;
    int length = 0;          // target length; for longest path, an upper cap
    bool maximize = false;   // longest-path mode
  };

  std::optional<BergeWitness> run(const Goal& goal) {
    goal_ = goal;
    found_.reset();
    best_len_ = 0;
    if (goal.length <= 0) return std::nullopt;
    for (int s = 0; s < n_ && !done(); ++s) {
      State st;
      st.seq = {s};
      st.visited = VertexSet{s};
      st.pair_match.clear();
      st.inst_match.assign(m_, -1);
      extend(st);
    }
    return found_;
  }

  int best_length() const { return best_len_; }

 private:
  struct State {
    std::vector<int> seq;
    VertexSet visited;
    std::vector<int> pair_match;  // instance matched to pair i = (seq[i], seq[i+1])
    std::vector<int> inst_match;  // pair matched to instance, -1 if free
    std::vector<std::pair<int, int>> pairs;
  };

  bool done() const {
    if (goal_.maximize) return best_len_ >= goal_.length;
    return found_.has_value();
  }

  bool augment(State& st, int pair, std::vector<char>& seen) const {
    const auto [a, b] = st.pairs[pair];
    for (int inst : pair_instances_[a * n_ + b]) {
      if (seen[inst]) continue;
      seen[inst] = 1;
      if (st.inst_match[inst] < 0 || augment(st, st.inst_match[inst], seen)) {
        st.inst_match[inst] = pair;
        st.pair_match[pair] = inst;
        return true;
      }
    }
    return false;
  }

  // Appends pair (a,b); returns false (state unchanged in meaning) if no SDR.
  bool push_pair(State& st, int a, int b) const {
    st.pairs.emplace_back(a, b);
    st.pair_match.push_back(-1);
    std::vector<char> seen(m_, 0);
    return augment(st, static_cast<int>(st.pairs.size()) - 1, seen);
  }

  BergeWitness witness(const State& st, WitnessKind kind) const {
    BergeWitness w;
    w.kind = kind;
    w.vertices = st.seq;
    for (int inst : st.pair_match) w.edge_instances.push_back(static_cast<std::size_t>(inst));
    return w;
  }

  void extend(const State& st) {
    const int len = static_cast<int>(st.seq.size()) - 1;
    if (goal_.maximize && len > best_len_) {
      best_len_ = len;
      found_ = witness(st, WitnessKind::path);
    }
    if (goal_.cycle) {
      if (static_cast<int>(st.seq.size()) == goal_.length) {
        // Close the cycle; for k >= 3 fix orientation by seq[1] < seq.back().
        if (goal_.length >= 3 && st.seq[1] > st.seq.back()) return;
        State closed = st;
        if (push_pair(closed, st.seq.back(), st.seq.front()))
          found_ = witness(closed, WitnessKind::cycle);
        return;
      }
    } else if (len == goal_.length) {
      if (!goal_.maximize) found_ = witness(st, WitnessKind::path);
      return;
    }
    if (static_cast<std::size_t>(len) >= m_) return;

    const int tail = st.seq.back();
    VertexSet candidates = neighbors_[tail] - st.visited;
    if (goal_.cycle) candidates -= VertexSet::full(st.seq.front() + 1);
    for (int next : candidates.to_vector()) {
      State child = st;
      if (!push_pair(child, tail, next)) continue;
      child.seq.push_back(next);
      child.visited.insert(next);
      extend(child);
      if (done()) return;
    }
  }

  const Hypergraph& h_;
  int n_;
  std::size_t m_;
  std::vector<std::vector<int>> pair_instances_;
  std::vector<VertexSet> neighbors_;
  Goal goal_;
  std::optional<BergeWitness> found_;
  int best_len_ = 0;
};

}  // namespace

bool verify_witness(const Hypergraph& h, const BergeWitness& w) {
  for (std::size_t inst : w.edge_instances)
    if (inst >= h.size())
      throw std::out_of_range("witness references instance " + std::to_string(inst) +
                              " of a hypergraph with " + std::to_string(h.size()));
  const std::size_t k = w.edge_instances.size();
  if (w.kind == WitnessKind::path) {
    if (k < 1 || w.vertices.size() != k + 1) return false;
  } else {
    if (k < 2 || w.vertices.size() != k) return false;
  }
  VertexSet seen;
  for (int v : w.vertices) {
    if (v < 0 || v >= h.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  auto sorted = w.edge_instances;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const int a = w.vertices[i];
    const int b = w.vertices[(i + 1) % w.vertices.size()];
    const VertexSet e = h.edge(w.edge_instances[i]);
    if (!e.contains(a) || !e.contains(b)) return false;
  }
  return true;
}

std::optional<BergeWitness> find_berge_path(const Hypergraph& h, int k) {
  if (k < 1) throw ParameterError("Berge path length must be at least 1");
  if (k > h.order() - 1 || static_cast<std::size_t>(k) > h.size()) return std::nullopt;
  BergeSearch search(h);
  return search.run({.cycle = false, .length = k, .maximize = false});
}

bool contains_berge_path(const Hypergraph& h, int k) { return find_berge_path(h, k).has_value(); }

std::optional<BergeWitness> find_berge_cycle(const Hypergraph& h, int k, CycleMode mode) {
  if (k < 2) throw ParameterError("Berge cycle length must be at least 2");
  const int cap = std::min<int>(h.order(), static_cast<int>(h.size()));
  const int last = mode == CycleMode::exact ? k : cap;
  BergeSearch search(h);
  for (int len = k; len <= last && len <= cap; ++len) {
    if (auto w = search.run({.cycle = true, .length = len, .maximize = false})) return w;
  }
  return std::nullopt;
}

bool contains_berge_cycle(const Hypergraph& h, int k, CycleMode mode) {
  return find_berge_cycle(h, k, mode).has_value();
}

LongestPath longest_berge_path(const Hypergraph& h) {
  LongestPath out;
  const int cap = std::min<int>(h.order() - 1, static_cast<int>(h.size()));
  if (cap <= 0) return out;
  BergeSearch search(h);
  out.witness = search.run({.cycle = false, .length = cap, .maximize = true});
  out.length = search.best_length();
  if (out.length == 0) out.witness.reset();
  return out;
}

}  // namespace bergepath
