#include "bergepath/sparse_set.hpp"

#include <vector>

namespace bergepath {

std::string to_string(SparseVerdict verdict) {
  switch (verdict) {
    case SparseVerdict::witness_found: return "witness_found";
    case SparseVerdict::precondition_violated: return "precondition_violated";
    case SparseVerdict::counterexample: return "counterexample";
  }
  return "?";
}

std::string to_string(SparseCase c) {
  return c == SparseCase::size_2r_minus_2 ? "size_2r_minus_2" : "size_ge_2r_minus_1";
}

std::optional<SparseCase> sparse_set_case(const Hypergraph& h, VertexSet s, int m, int t) {
  const int r = h.uniformity();
  const int size = s.size();
  const auto nbhd = static_cast<int>(hyperedge_neighborhood(h, s).size());
  if (size >= 2 * r - 2 && nbhd <= m + 1) return SparseCase::size_2r_minus_2;
  if (size >= 2 * r - 1 && nbhd <= t) return SparseCase::size_ge_2r_minus_1;
  return std::nullopt;
}

namespace {

// Fills t and path; returns false with report.violated set on failure.
bool check_preconditions(const Hypergraph& h, int m, SparseSetReport& report, LongestPath& lp) {
  auto fail = [&](std::string why) {
    report.verdict = SparseVerdict::precondition_violated;
    report.violated = std::move(why);
    return false;
  };
  if (m < 1) return fail("m >= 1");
  if (!is_connected(h)) return fail("connected");
  if (h.order() <= h.uniformity()) return fail("n > r");
  if (h.max_multiplicity() > m) return fail("multiplicity <= m");
  lp = longest_berge_path(h);
  report.longest_path = lp.length;
  if (lp.length < 2) return fail("longest path length t >= 2");
  if (lp.length > h.uniformity() - 1) return fail("t <= r-1");
  if (contains_berge_cycle(h, lp.length)) return fail("BC_t-free");
  return true;
}

// Subset of the given size with the smallest neighborhood.
std::optional<VertexSet> sparsest_subset(const Hypergraph& h, int size, int& best_nbhd) {
  const int n = h.order();
  if (size > n || size < 0) return std::nullopt;
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  std::optional<VertexSet> best;
  while (true) {
    const VertexSet s = VertexSet::from(idx);
    const auto nb = static_cast<int>(hyperedge_neighborhood(h, s).size());
    if (!best || nb < best_nbhd) {
      best = s;
      best_nbhd = nb;
    }
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

void finish(const Hypergraph& h, int m, VertexSet s, SparseSetReport& report) {
  report.set = s;
  report.neighborhood_size = static_cast<int>(hyperedge_neighborhood(h, s).size());
  report.which = sparse_set_case(h, s, m, report.longest_path);
  report.verdict = report.which ? SparseVerdict::witness_found : SparseVerdict::counterexample;
}

}  // namespace

SparseSetReport find_sparse_set(const Hypergraph& h, int m) {
  SparseSetReport report;
  LongestPath lp;
  if (!check_preconditions(h, m, report, lp)) return report;
  const int r = h.uniformity();
  for (const int size : {2 * r - 2, 2 * r - 1}) {
    int nbhd = 0;
    const auto s = sparsest_subset(h, size, nbhd);
    if (!s) break;
    if (sparse_set_case(h, *s, m, lp.length)) {
      finish(h, m, *s, report);
      return report;
    }
  }
  report.verdict = SparseVerdict::counterexample;
  return report;
}

SparseSetReport build_sparse_set(const Hypergraph& h, int m) {
  SparseSetReport report;
  LongestPath lp;
  if (!check_preconditions(h, m, report, lp)) return report;
  report.path = lp.witness;

  const int t = lp.length;
  const BergeWitness& w = *lp.witness;
  // e(i), 1 <= i <= t, is the i-th defining edge; v(i), 1 <= i <= t-1, the
  // interior defining vertices; v(0) and v(t) are the path ends.
  auto e = [&](int i) { return h.edge(w.edge_instances[static_cast<std::size_t>(i - 1)]); };
  auto v = [&](int i) { return w.vertices[static_cast<std::size_t>(i)]; };

  VertexSet interior;
  for (int i = 1; i <= t - 1; ++i) interior.insert(v(i));
  const VertexSet first = e(1);
  const VertexSet last = e(t);

  int d1 = 1;
  while (d1 < t && e(d1 + 1) == first) ++d1;
  int d2 = 1;
  while (d2 < t && e(t - d2) == last) ++d2;

  VertexSet head_run;
  for (int i = 1; i <= d1 && i <= t - 1; ++i) head_run.insert(v(i));
  VertexSet tail_run;
  for (int i = t - d2; i <= t - 1; ++i)
    if (i >= 1) tail_run.insert(v(i));

  VertexSet s;
  if ((first & interior) == head_run && (last & interior) == tail_run) {
    report.branch = "claim";
    VertexSet drop;
    drop.insert(v(d1));
    drop.insert(v(t - d2));
    s = (first | last) - drop;
    const VertexSet head = first - drop;
    const VertexSet tail = last - drop;
    for (int j = d1 + 1; j <= t - d2; ++j) {
      if (e(j).intersects(head)) {
        s.insert(v(j - 1));
        break;
      }
    }
    for (int j = d1 + 1; j <= t - d2; ++j) {
      if (e(j).intersects(tail)) {
        s.insert(v(j));
        break;
      }
    }
  } else {
    report.branch = "recursion";
    s = (first | last) - interior;
    auto grow = [&](int i) {
      const VertexSet outside = e(i) - interior;
      if (outside.intersects(s)) s.insert(v(i - 1));
      s |= outside;
    };
    for (int i = 2; i <= t - 1; ++i)
      if (first.contains(v(i))) grow(i);
    for (int j = 2; j <= t; ++j)
      if (last.contains(v(j - 1))) grow(j);
  }
  finish(h, m, s, report);
  return report;
}

}  // namespace bergepath
