#include "bergepath/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "bergepath/berge.hpp"
#include "bergepath/canonical.hpp"
#include "bergepath/constructions.hpp"
#include "bergepath/formulas.hpp"

namespace bergepath {

bool FamilySpec::contained_in(const Hypergraph& h) const {
  switch (forbidden) {
    case Forbidden::path: return contains_berge_path(h, k);
    case Forbidden::cycle_exact: return contains_berge_cycle(h, k, CycleMode::exact);
    case Forbidden::cycle_at_least: return contains_berge_cycle(h, k, CycleMode::at_least);
  }
  return false;
}

std::string FamilySpec::to_string() const {
  std::string out;
  switch (forbidden) {
    case Forbidden::path: out = "BP_" + std::to_string(k); break;
    case Forbidden::cycle_exact: out = "BC_" + std::to_string(k); break;
    case Forbidden::cycle_at_least: out = "BC_>=" + std::to_string(k); break;
  }
  if (multiplicity_cap > 1) out += " (multiplicity <= " + std::to_string(multiplicity_cap) + ")";
  return out;
}

std::string to_string(ConjectureStatus status) {
  switch (status) {
    case ConjectureStatus::match: return "match";
    case ConjectureStatus::exact_exceeds: return "exact_exceeds";
    case ConjectureStatus::exact_below: return "exact_below";
  }
  return "?";
}

namespace {

constexpr const char* kCheckpointMagic = "bergepath-checkpoint";
constexpr int kCheckpointVersion = 1;

int forbidden_code(Forbidden f) { return static_cast<int>(f); }

void validate(int n, int r, const FamilySpec& spec, const SearchOptions& options) {
  if (n < 1 || r < 2) throw ParameterError("search requires n >= 1 and r >= 2");
  if (spec.multiplicity_cap < 1) throw ParameterError("multiplicity cap must be >= 1");
  if (spec.forbidden == Forbidden::path && spec.k < 1)
    throw ParameterError("Berge path length must be >= 1");
  if (spec.forbidden != Forbidden::path && spec.k < 2)
    throw ParameterError("Berge cycle length must be >= 2");
  if (options.workers < 1) throw ParameterError("workers must be >= 1");
  if (n > options.max_order)
    throw LimitError("search limited to n <= " + std::to_string(options.max_order));
  if (n >= r && binom(n, r) * spec.multiplicity_cap > options.max_candidates)
    throw LimitError("search limited to m * C(n, r) <= " + std::to_string(options.max_candidates));
}

std::vector<VertexSet> all_r_subsets(int n, int r) {
  std::vector<VertexSet> out;
  if (r > n) return out;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    out.push_back(VertexSet::from(idx));
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// Runs f(i) for i in [0, count) on up to `workers` threads.
template <class F>
void parallel_for(std::size_t count, int workers, F&& f) {
  const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = next++; i < count; i = next++) f(i, t);
    });
  for (auto& th : pool) th.join();
}

struct State {
  int level = 0;  // instance count of the frontier
  int best = -1;  // largest level with a spanning member, -1 if none
  std::uint64_t nodes = 0;
  std::vector<std::string> best_texts;  // spanning members at `best`, sorted, capped
  std::vector<std::string> frontier;    // sorted canonical texts
};

struct Params {
  int n, r;
  FamilySpec spec;
};

void write_checkpoint(const std::filesystem::path& path, const Params& p, const State& s) {
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
    out << kCheckpointMagic << ' ' << kCheckpointVersion << '\n'
        << p.n << ' ' << p.r << ' ' << forbidden_code(p.spec.forbidden) << ' ' << p.spec.k << ' '
        << p.spec.multiplicity_cap << '\n'
        << s.level << ' ' << s.best << ' ' << s.nodes << '\n'
        << s.best_texts.size() << '\n';
    for (const auto& t : s.best_texts) out << t << '\n';
    out << s.frontier.size() << '\n';
    for (const auto& t : s.frontier) out << t << '\n';
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::optional<State> read_checkpoint(const std::filesystem::path& path, const Params& p) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string magic;
  int version = 0;
  in >> magic >> version;
  if (magic != kCheckpointMagic || version != kCheckpointVersion)
    throw ParameterError("unrecognized checkpoint file " + path.string());
  int n, r, f, k, cap;
  in >> n >> r >> f >> k >> cap;
  if (n != p.n || r != p.r || f != forbidden_code(p.spec.forbidden) || k != p.spec.k ||
      cap != p.spec.multiplicity_cap)
    throw ParameterError("checkpoint " + path.string() + " was written for different parameters");
  State s;
  std::size_t count = 0;
  in >> s.level >> s.best >> s.nodes >> count;
  s.best_texts.resize(count);
  for (auto& t : s.best_texts) in >> t;
  in >> count;
  s.frontier.resize(count);
  for (auto& t : s.frontier) in >> t;
  if (!in) throw ParameterError("truncated checkpoint " + path.string());
  return s;
}

// Level-wise generation shared by exact_ex_conn and enumerate_connected.
// `on_spanning` receives each level's spanning members (sorted).
template <class OnSpanning>
State run_levels(int n, int r, const FamilySpec& spec, const SearchOptions& options,
                 int max_level, OnSpanning&& on_spanning) {
  const Params params{n, r, spec};
  const auto candidates = all_r_subsets(n, r);
  const VertexSet all = VertexSet::full(n);

  State state;
  bool resumed = false;
  if (options.checkpoint) {
    if (auto s = read_checkpoint(*options.checkpoint, params)) {
      state = std::move(*s);
      resumed = true;
    }
  }
  if (!resumed) {
    const Hypergraph empty = Hypergraph::build(n, r, std::vector<VertexSet>{});
    state.frontier = {canonical_form(empty, options.max_order).text};
    if (is_connected(empty)) {
      state.best = 0;
      state.best_texts = state.frontier;
    }
    on_spanning(0, std::vector<Hypergraph>(is_connected(empty) ? 1 : 0, empty));
  }

  while (!state.frontier.empty() && state.level < max_level) {
    std::vector<std::set<std::string>> local(static_cast<std::size_t>(options.workers));
    std::vector<std::uint64_t> generated(static_cast<std::size_t>(options.workers), 0);
    parallel_for(state.frontier.size(), options.workers, [&](std::size_t i, std::size_t t) {
      const Hypergraph parent = from_canonical_text(state.frontier[i]);
      const VertexSet support = parent.support();
      for (const VertexSet c : candidates) {
        if (parent.size() > 0 && !c.intersects(support)) continue;
        if (parent.multiplicity_of(c) >= spec.multiplicity_cap) continue;
        ++generated[t];
        local[t].insert(canonical_form(parent.with_edge(c), options.max_order).text);
      }
    });
    std::set<std::string> merged;
    for (auto& s : local) merged.merge(s);
    for (auto g : generated) state.nodes += g;

    std::vector<std::string> texts(merged.begin(), merged.end());
    std::vector<char> keep(texts.size(), 0);
    parallel_for(texts.size(), options.workers, [&](std::size_t i, std::size_t) {
      keep[i] = !spec.contained_in(from_canonical_text(texts[i]));
    });

    ++state.level;
    state.frontier.clear();
    std::vector<Hypergraph> spanning;
    std::vector<std::string> spanning_texts;
    for (std::size_t i = 0; i < texts.size(); ++i) {
      if (!keep[i]) continue;
      state.frontier.push_back(texts[i]);
      Hypergraph h = from_canonical_text(texts[i]);
      if (h.support() == all) {
        spanning_texts.push_back(texts[i]);
        spanning.push_back(std::move(h));
      }
    }
    if (!spanning.empty()) {
      state.best = state.level;
      state.best_texts = std::move(spanning_texts);
      if (state.best_texts.size() > options.witness_cap) state.best_texts.resize(options.witness_cap);
    }
    on_spanning(state.level, spanning);
    if (options.checkpoint) write_checkpoint(*options.checkpoint, params, state);
  }
  return state;
}

}  // namespace

SearchOutcome exact_ex_conn(int n, int r, const FamilySpec& spec, const SearchOptions& options) {
  validate(n, r, spec, options);
  const auto start = std::chrono::steady_clock::now();
  int max_level = std::numeric_limits<int>::max();
  if (options.bound_pruning && spec.forbidden == Forbidden::path) {
    if (auto kl = kostochka_luo_bound(n, r, spec.k))
      max_level = static_cast<int>(kl->floor()) * spec.multiplicity_cap;
  }
  const State state = run_levels(n, r, spec, options, max_level, [](int, const auto&) {});
  SearchOutcome out;
  out.nodes_explored = state.nodes;
  if (state.best >= 0) {
    out.status = SearchStatus::value;
    out.value = state.best;
    out.witnesses = state.best_texts;
  }
  out.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<Hypergraph> enumerate_connected(int n, int r, const FamilySpec& spec,
                                            const SearchOptions& options) {
  validate(n, r, spec, options);
  SearchOptions opts = options;
  opts.checkpoint.reset();
  std::vector<Hypergraph> out;
  run_levels(n, r, spec, opts, std::numeric_limits<int>::max(),
             [&](int, const std::vector<Hypergraph>& level) {
               out.insert(out.end(), level.begin(), level.end());
             });
  return out;
}

ConjectureReport conjecture_check(int n, int r, int k, const SearchOptions& options) {
  if (!(k >= r + 1 && k <= 2 * r - 1 && n >= k - 1))
    throw ParameterError("conjecture check requires r+1 <= k <= 2r-1 and n >= k-1");
  ConjectureReport report;
  report.n = n;
  report.r = r;
  report.k = k;
  report.conjectured = Rational(n - (k - 2) + binom(k - 2, r));
  const Hypergraph core = complete_core(n, r, k);
  report.construction_edges = static_cast<std::int64_t>(core.size());
  report.construction_verified = is_connected(core) && !contains_berge_path(core, k) &&
                                 Rational(report.construction_edges) == report.conjectured;
  report.exact = exact_ex_conn(n, r, FamilySpec::berge_path(k), options);
  if (report.exact.status == SearchStatus::infeasible ||
      Rational(report.exact.value) < report.conjectured)
    report.status = ConjectureStatus::exact_below;
  else if (Rational(report.exact.value) > report.conjectured)
    report.status = ConjectureStatus::exact_exceeds;
  else
    report.status = ConjectureStatus::match;
  return report;
}

}  // namespace bergepath
