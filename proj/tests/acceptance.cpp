// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bergepath/berge.hpp"
#include "bergepath/canonical.hpp"
#include "bergepath/constructions.hpp"
#include "bergepath/formulas.hpp"
#include "bergepath/io.hpp"
#include "bergepath/sparse_set.hpp"
#include "bergepath/search.hpp"

using namespace bergepath;
using nlohmann::json;

namespace {

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
  void note(const std::string& what) { notes.push_back(what); }
};

SearchOptions with_workers(int w) {
  SearchOptions o;
  o.workers = w;
  return o;
}

std::string show(const SearchOutcome& s) {
  return s.status == SearchStatus::infeasible ? "infeasible" : std::to_string(s.value);
}

std::string triple(int n, int r, int k) {
  return "(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(k) + ")";
}

// Criterion 1: ex^conn(n, 3, BP_3) for n = 3..9. The listed values cover
// n = 4..9; n = 3 uses (n-1)/(r-1), since two distinct 3-edges need four
// vertices.
json prop1(int workers, Verdict& v) {
  const std::map<int, int> expected{{3, 1}, {4, 2}, {5, 2}, {6, -1}, {7, 3}, {8, -1}, {9, 4}};
  json report = json::array();
  for (const auto& [n, want] : expected) {
    const auto out = exact_ex_conn(n, 3, FamilySpec::berge_path(3), with_workers(workers));
    report.push_back({{"n", n}, {"outcome", to_json(out)}});
    const bool ok = want < 0 ? out.status == SearchStatus::infeasible
                             : out.status == SearchStatus::value && out.value == want;
    if (!ok)
      v.fail("n=" + std::to_string(n) + " exact " + show(out) + ", expected " +
             (want < 0 ? "infeasible" : std::to_string(want)));
  }
  return report;
}

// Criterion 2: ex^conn(n, 4, BP_4) for n = 6..10.
json prop2(int workers, Verdict& v) {
  json report = json::array();
  for (int n = 6; n <= 10; ++n) {
    const auto out = exact_ex_conn(n, 4, FamilySpec::berge_path(4), with_workers(workers));
    report.push_back({{"n", n}, {"outcome", to_json(out)}});
    const std::string at = "n=" + std::to_string(n) + ": ";
    if (out.status != SearchStatus::value) {
      v.fail(at + "exact infeasible");
      continue;
    }
    if (n <= 8) {
      if (out.value != 4) v.fail(at + "exact " + std::to_string(out.value) + ", expected 4");
      continue;
    }
    const Rational cap = std::max(Rational(n - 5, 3) + Rational(3), Rational(n - 4, 2) + Rational(2));
    if (Rational(out.value) > cap)
      v.fail(at + "exact " + std::to_string(out.value) + " > " + cap.to_string());
    for (const std::string family : {"k4-h1", "k4-h2"}) {
      try {
        const auto c = construct_by_name(family, n, 4, 4);
        if (out.value < c.expected_edges)
          v.fail(at + "exact " + std::to_string(out.value) + " < " + family + " count " +
                 std::to_string(c.expected_edges));
      } catch (const ParameterError&) {
      }
    }
  }
  return report;
}

// Criterion 3: generator contract over a parameter grid.
void construction_suite(Verdict& v) {
  std::map<std::string, std::pair<int, int>> tally;  // name -> (checked, failed)
  std::map<std::string, std::string> first_failure;
  int total = 0;
  for (const auto& name : family_names())
    for (int r = 3; r <= 6; ++r)
      for (int k = 3; k <= r + 2; ++k)
        for (int n = r; n <= 20; ++n) {
          NamedConstruction c;
          try {
            c = construct_by_name(name, n, r, k);
          } catch (const ParameterError&) {
            continue;
          }
          if (c.k != k) continue;
          ++total;
          auto& t = tally[name];
          ++t.first;
          const auto& h = c.hypergraph;
          std::string why;
          if (h.order() != n || h.uniformity() != r) why = "wrong shape";
          else if (!is_connected(h)) why = "disconnected";
          else if (static_cast<std::int64_t>(h.size()) != c.expected_edges) why = "edge count";
          else if (contains_berge_path(h, k)) why = "contains BP_" + std::to_string(k);
          if (why.empty()) continue;
          ++t.second;
          if (!first_failure.count(name)) first_failure[name] = triple(n, r, k) + " " + why;
        }
  if (total < 30) v.fail("grid has only " + std::to_string(total) + " tuples");
  for (const auto& [name, t] : tally) {
    std::string line = name + " " + std::to_string(t.first - t.second) + "/" + std::to_string(t.first);
    if (t.second) {
      v.fail(line + ", first failure " + first_failure[name]);
    } else {
      v.note(line);
    }
  }
  v.note(std::to_string(total) + " tuples");
}

// Criterion 4: sunflower lower bound.
void sunflower_bound(Verdict& v) {
  for (int r = 3; r <= 5; ++r)
    for (int n = r + 1; n <= r + 6; ++n) {
      const auto h = sunflower(n, r);
      if (!is_connected(h) || contains_berge_path(h, r + 1) ||
          static_cast<int>(h.size()) != n - r + 1)
        v.fail("sunflower(" + std::to_string(n) + "," + std::to_string(r) + ")");
    }
  for (int n = 5; n <= 7; ++n) {
    const auto out = exact_ex_conn(n, 3, FamilySpec::berge_path(4));
    if (out.status != SearchStatus::value || out.value < n - 2)
      v.fail("n=" + std::to_string(n) + " exact " + show(out) + " < " + std::to_string(n - 2));
    else if (out.value != n - 2)
      v.note("n=" + std::to_string(n) + " exact " + std::to_string(out.value) + " differs from n-r+1");
  }
}

// Criterion 5: sparse sets in every admissible connected BP_3-free 3-graph, n <= 8.
json sparse_set_population(int workers, Verdict& v) {
  json report = json::array();
  int admissible = 0, constructive_ok = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& h : enumerate_connected(n, 3, FamilySpec::berge_path(3), with_workers(workers))) {
      const auto check = find_sparse_set(h, 1);
      if (check.verdict == SparseVerdict::precondition_violated) continue;
      ++admissible;
      const auto built = build_sparse_set(h, 1);
      report.push_back(
          {{"hypergraph", encode_text(h)}, {"check", to_json(check)}, {"constructive", to_json(built)}});
      if (check.verdict != SparseVerdict::witness_found) v.fail("no witness for " + encode_text(h));
      if (built.verdict == SparseVerdict::witness_found &&
          sparse_set_case(h, built.set, 1, built.longest_path))
        ++constructive_ok;
      else
        v.fail("constructive route failed on " + encode_text(h));
    }
  }
  v.note(std::to_string(admissible) + " admissible hypergraphs, " + std::to_string(constructive_ok) +
         " constructive witnesses");
  if (admissible == 0) v.fail("empty population");
  return report;
}

// Criterion 6: exact <= Kostochka-Luo on 3 <= k <= r <= 5, n <= 8.
void kl_sweep(Verdict& v) {
  int compared = 0;
  for (int r = 3; r <= 5; ++r)
    for (int k = 3; k <= r; ++k)
      for (int n = r; n <= 8; ++n) {
        const auto out = exact_ex_conn(n, r, FamilySpec::berge_path(k));
        if (out.status == SearchStatus::infeasible) continue;
        ++compared;
        const auto bound = *kostochka_luo_bound(n, r, k);
        if (Rational(out.value) > bound)
          v.fail(triple(n, r, k) + " exact " + std::to_string(out.value) + " > " + bound.to_string());
      }
  v.note(std::to_string(compared) + " feasible tuples");
}

// Criterion 7: graphs against the Kopylov value.
void graph_oracle(Verdict& v) {
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{5, 4}, {6, 4}, {6, 5}, {7, 5}}) {
    const auto f = classical_bound(ClassicalBound::kopylov, n, 2, k);
    const auto out = exact_ex_conn(n, 2, FamilySpec::berge_path(k));
    const std::string at = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
    if (!f.value || out.status != SearchStatus::value || Rational(out.value) != *f.value)
      v.fail(at + " exact " + show(out) + " formula " + (f.value ? f.value->to_string() : "undefined"));
    else
      v.note(at + "=" + std::to_string(out.value));
  }
}

// Criterion 8: complete-core conjecture at small n.
void conjecture_desk(Verdict& v) {
  for (const auto& [n, r, k] : std::vector<std::tuple<int, int, int>>{{6, 3, 4}, {7, 3, 5}, {8, 3, 5}}) {
    const auto rep = conjecture_check(n, r, k);
    const std::string at = triple(n, r, k);
    if (rep.exact.status != SearchStatus::value || Rational(rep.exact.value) < rep.conjectured)
      v.fail(at + " exact " + show(rep.exact) + " below " + rep.conjectured.to_string());
    else if (!rep.construction_verified || Rational(rep.construction_edges) != rep.conjectured)
      v.fail(at + " construction does not attain " + rep.conjectured.to_string());
    else
      v.note(at + " exact " + std::to_string(rep.exact.value) + " conjectured " +
             rep.conjectured.to_string() + " " + to_string(rep.status));
  }
}

// Criterion 9: byte-identical reports for criteria 1, 2 and 5 at 1, 2 and 8 workers.
void determinism(Verdict& v) {
  const std::vector<std::pair<std::string, std::function<json(int, Verdict&)>>> runs{
      {"1", prop1}, {"2", prop2}, {"5", sparse_set_population}};
  for (const auto& [label, fn] : runs) {
    std::string reference;
    for (int w : {1, 2, 8}) {
      Verdict scratch;
      const auto text = fn(w, scratch).dump();
      if (w == 1) reference = text;
      else if (text != reference) v.fail("criterion " + label + " differs at " + std::to_string(w) + " workers");
    }
    v.note("criterion " + label + " " + std::to_string(reference.size()) + " bytes");
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double budget_s;
    std::function<void(Verdict&)> body;
  };
  const std::vector<Criterion> criteria{
      {1, "k=3 values over n=3..9", 60, [](Verdict& v) { prop1(1, v); }},
      {2, "k=4 values over n=6..10", 600, [](Verdict& v) { prop2(1, v); }},
      {3, "construction property suite", 300, construction_suite},
      {4, "sunflower lower bound", 600, sunflower_bound},
      {5, "sparse-set population", 1800, [](Verdict& v) { sparse_set_population(1, v); }},
      {6, "Kostochka-Luo consistency sweep", 600, kl_sweep},
      {7, "graph values match Kopylov", 120, graph_oracle},
      {8, "complete-core conjecture desk check", 600, conjecture_desk},
      {9, "determinism across worker counts", 600, determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(v);
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) v.fail("took " + std::to_string(secs) + " s");
    std::ostringstream detail;
    for (std::size_t i = 0; i < v.notes.size(); ++i) detail << (i ? "; " : "") << v.notes[i];
    std::printf("%s %d %s (%.2fs): %s\n", v.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                detail.str().c_str());
    std::fflush(stdout);
    failed += !v.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
