#include "bergepath/formulas.hpp"

#include <array>
#include <utility>

#include "bergepath/hypergraph.hpp"

namespace bergepath {
namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) { return Rational(a, b).floor(); }
std::int64_t indicator(bool c) { return c ? 1 : 0; }

FormulaResult make(Rational value, Regime regime, std::string source, std::string note = {}) {
  FormulaResult out;
  out.value = value;
  out.regime = regime;
  out.source = std::move(source);
  out.note = std::move(note);
  return out;
}

FormulaResult undefined(std::string source, std::string note) {
  FormulaResult out;
  out.regime = Regime::undefined;
  out.source = std::move(source);
  out.note = std::move(note);
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

constexpr std::array<std::pair<ClassicalBound, const char*>, 7> kClassicalNames{{
    {ClassicalBound::kostochka_luo, "kostochka_luo"},
    {ClassicalBound::gkl_small, "gkl_small"},
    {ClassicalBound::gkl_large, "gkl_large"},
    {ClassicalBound::dgmt, "dgmt"},
    {ClassicalBound::kopylov, "kopylov"},
    {ClassicalBound::fkl_conn, "fkl_conn"},
    {ClassicalBound::gsz21, "gsz21"},
}};

constexpr std::array<std::pair<CycleBound, const char*>, 5> kCycleNames{{
    {CycleBound::glsz_small, "glsz_small"},
    {CycleBound::glsz_eq, "glsz_eq"},
    {CycleBound::multi, "multi"},
    {CycleBound::egmstz, "egmstz"},
    {CycleBound::fkl_cycle, "fkl_cycle"},
}};

std::int64_t glsz_eq_blocks(int n, int r) { return (r - 1) * floor_div(n - 1, r); }

}  // namespace

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::exact: return "exact";
    case Regime::exact_for_large_n: return "exact_for_large_n";
    case Regime::upper_bound: return "upper_bound";
    case Regime::lower_bound: return "lower_bound";
    case Regime::conjectured: return "conjectured";
    case Regime::undefined: return "undefined";
  }
  return "undefined";
}

std::string to_string(ClassicalBound selector) {
  for (const auto& [s, name] : kClassicalNames)
    if (s == selector) return name;
  return "?";
}

std::string to_string(CycleBound selector) {
  for (const auto& [s, name] : kCycleNames)
    if (s == selector) return name;
  return "?";
}

std::optional<ClassicalBound> parse_classical_bound(const std::string& name) {
  for (const auto& [s, n] : kClassicalNames)
    if (name == n) return s;
  return std::nullopt;
}

std::optional<CycleBound> parse_cycle_bound(const std::string& name) {
  for (const auto& [s, n] : kCycleNames)
    if (name == n) return s;
  return std::nullopt;
}

std::optional<Rational> kostochka_luo_bound(int n, int r, int k) {
  if (!(r >= k && k >= 3)) return std::nullopt;
  return max(Rational(k - 1), Rational(std::int64_t{k} * n, 2 * r - k + 4));
}

FormulaResult classical_bound(ClassicalBound selector, int n, int r, int k) {
  require(n >= 1 && r >= 2, "classical_bound: need n >= 1 and r >= 2");
  switch (selector) {
    case ClassicalBound::kostochka_luo:
      require(r >= k && k >= 3, "kostochka_luo: requires r >= k >= 3");
      return make(*kostochka_luo_bound(n, r, k), Regime::upper_bound, "Kostochka-Luo");
    case ClassicalBound::gkl_small:
      require(r >= k && k > 2, "gkl_small: requires r >= k > 2");
      return make(Rational(std::int64_t{n} * (k - 1), r + 1), Regime::upper_bound,
                  "Gyori-Katona-Lemons (k <= r)");
    case ClassicalBound::gkl_large:
      require(k > r + 1 && r + 1 > 3, "gkl_large: requires k > r+1 > 3");
      return make(Rational(n, k) * Rational(binom(k, r)), Regime::upper_bound,
                  "Gyori-Katona-Lemons (k > r+1)");
    case ClassicalBound::dgmt:
      require(k == r + 1, "dgmt: requires k = r+1");
      return make(Rational(n), Regime::upper_bound, "Davoodi-Gyori-Methuku-Tompkins");
    case ClassicalBound::kopylov: {
      require(r == 2 && n >= k && k >= 4, "kopylov: requires r = 2 and n >= k >= 4");
      const std::int64_t c = (k + 2) / 2;  // ceil((k+1)/2)
      const std::int64_t f = (k - 1) / 2;
      const Rational first(binom(k - 1, 2) + (n - k + 1));
      const Rational second(binom(c, 2) + f * (n - c));
      return make(max(first, second), Regime::exact, "Kopylov/BGLS");
    }
    case ClassicalBound::fkl_conn: {
      require(n >= k && k >= 4 * r && 4 * r >= 12, "fkl_conn: requires n >= k >= 4r >= 12");
      const std::int64_t c = (k + 2) / 2;
      const std::int64_t f = (k - 1) / 2;
      return make(Rational(binom(c, r) + (n - c) * binom(f, r - 1)), Regime::upper_bound,
                  "Furedi-Kostochka-Luo (connected)");
    }
    case ClassicalBound::gsz21: {
      require(k >= 2 * r + 13 && 2 * r + 13 >= 18, "gsz21: requires k >= 2r+13 >= 18");
      const std::int64_t f = (k - 1) / 2;
      return make(Rational(binom(f, r - 1) * (n - f) + binom(f, r) +
                           indicator(k % 2 == 0) * binom(f, r - 2)),
                  Regime::exact_for_large_n, "Gyori-Salia-Zamora");
    }
  }
  throw ParameterError("unknown selector");
}

int glsz_eq_crossover(int r) {
  require(r >= 3, "glsz_eq_crossover: requires r >= 3");
  // From n = (r-1)^2 on the sunflower branch dominates.
  int n0 = r;
  for (int n = r; n <= r * r + 2 * r; ++n)
    if (n - r + 1 < glsz_eq_blocks(n, r)) n0 = n + 1;
  return n0;
}

FormulaResult bc_value(CycleBound selector, int n, int r, int k) {
  require(n >= 1 && r >= 2, "bc_value: need n >= 1 and r >= 2");
  switch (selector) {
    case CycleBound::glsz_small:
      require(r > k && k >= 3, "glsz_small: requires r > k >= 3");
      return make(Rational((k - 1) * floor_div(n - 1, r) + indicator(n % r == 0)), Regime::exact,
                  "Gyori-Lemons-Salia-Zamora (k < r)");
    case CycleBound::glsz_eq: {
      require(r >= 3 && k == r, "glsz_eq: requires k = r >= 3");
      const std::int64_t blocks = glsz_eq_blocks(n, r);
      const std::int64_t sunflower = n - r + 1;
      std::string note = std::string("branch=") + (blocks > sunflower ? "blocks" : "sunflower") +
                         "; crossover n0=" + std::to_string(glsz_eq_crossover(r));
      return make(Rational(std::max(blocks, sunflower)), Regime::exact,
                  "Gyori-Lemons-Salia-Zamora (k = r)", std::move(note));
    }
    case CycleBound::multi:
      require(k >= 2 && k <= r, "multi: requires 2 <= k <= r");
      return make(Rational((k - 1) * floor_div(n - 1, r - 1)), Regime::upper_bound,
                  "Gyori-Lemons-Salia-Zamora (multi-hypergraph)");
    case CycleBound::egmstz:
      require(k >= 4 && (k == r + 1 || k == r + 2), "egmstz: requires k >= 4, k in {r+1, r+2}");
      if (k == r + 1)
        return make(Rational(n - 1), Regime::upper_bound, "Ergemlidze et al. (k = r+1)");
      return make(Rational(std::int64_t{n - 1} * (r + 1), r), Regime::upper_bound,
                  "Ergemlidze et al. (k = r+2)");
    case CycleBound::fkl_cycle:
      require(k >= r + 3 && r + 3 >= 6, "fkl_cycle: requires k >= r+3 >= 6");
      return make(Rational(n - 1, k - 2) * Rational(binom(k - 1, r)), Regime::upper_bound,
                  "Furedi-Kostochka-Luo (cycles)");
  }
  throw ParameterError("unknown selector");
}

FormulaResult conn_bp_value(int n, int r, int k) {
  require(r >= 2 && n >= r && k >= 2, "conn_bp_value: requires n >= r >= 2 and k >= 2");
  FormulaResult out;
  const auto kl = kostochka_luo_bound(n, r, k);

  if (n == r) return make(Rational(1), Regime::exact, "single edge");
  if (k == 2) return undefined("single edge", "no connected BP_2-free hypergraph with n > r");

  if (r == 2) {
    if (k >= 4 && n >= k) return classical_bound(ClassicalBound::kopylov, n, r, k);
    return undefined("graphs", "outside the Kopylov range n >= k >= 4");
  }

  if (k == 3) {
    if (n <= 2 * r - 2) {
      out = make(Rational(2), Regime::exact, "k=3 double edge");
    } else if ((n - 1) % (r - 1) == 0) {
      out = make(Rational(n - 1, r - 1), Regime::exact, "k=3 star");
    } else {
      out = undefined("k=3 star", "n >= 2r-1 and (r-1) does not divide n-1");
    }
  } else if (k == 4 && r >= 4) {
    if (n <= r + 4) {
      out = make(Rational(4), Regime::exact, "k=4 three-edge gadget");
    } else {
      const Rational via_h2 = Rational(n - 5, r - 1) + Rational(3);
      const Rational via_h1 = Rational(n - 4, r - 2) + Rational(2);
      const bool h1 = (n - 4) % (r - 2) == 0;
      const bool h2 = (n - 5) % (r - 1) == 0;
      if (!h1 && !h2) {
        out = undefined("k=4 three-edge gadget",
                        "neither (r-2) | (n-4) nor (r-1) | (n-5)");
      } else {
        std::string note = "achieved branch:";
        if (h1) note += " h1=" + via_h1.to_string();
        if (h2) note += " h2=" + via_h2.to_string();
        out = make(max(via_h1, via_h2), Regime::upper_bound, "k=4 three-edge gadget",
                   std::move(note));
      }
      out.bounds.push_back({"k4_max", max(via_h1, via_h2)});
    }
  } else if (k >= 5 && k <= r) {
    if (n % r == 0) {
      out = undefined("hub blocks (5 <= k <= r)", "formula stated only when r does not divide n");
    } else {
      out = make(Rational(((k - 1) / 2) * floor_div(n - 1, r) + indicator(k % 2 == 0)),
                 Regime::exact_for_large_n, "hub blocks (5 <= k <= r)");
    }
  } else if (k == r + 1) {
    out = make(Rational(n - r + 1), Regime::exact_for_large_n, "sunflower (k = r+1)");
    out.bounds.push_back({"dgmt", Rational(n)});
  } else if (k >= r + 2 && k <= 2 * r - 1) {
    out = make(Rational(n - (k - 2) + binom(k - 2, r)), Regime::conjectured,
               "complete core (r+1 <= k <= 2r-1)");
  } else if (k >= 2 * r + 13) {
    out = classical_bound(ClassicalBound::gsz21, n, r, k);
  } else {
    out = undefined("none", "no closed form known for this (r, k)");
    if (n >= k && k >= 4 * r && 4 * r >= 12)
      out.bounds.push_back({"fkl_conn", *classical_bound(ClassicalBound::fkl_conn, n, r, k).value});
    if (k > r + 1 && r + 1 > 3)
      out.bounds.push_back(
          {"gkl_large", *classical_bound(ClassicalBound::gkl_large, n, r, k).value});
  }
  if (kl) out.bounds.push_back({"kostochka_luo", *kl});
  return out;
}

}  // namespace bergepath
