#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bergepath/rational.hpp"

namespace bergepath {

enum class Regime { exact, exact_for_large_n, upper_bound, lower_bound, conjectured, undefined };

std::string to_string(Regime regime);

/// A bound evaluated alongside a main value, for reporting.
struct AttachedBound {
  std::string selector;
  Rational value;
};

/// A closed-form value with its validity regime and citation tag.
struct FormulaResult {
  std::optional<Rational> value;  // absent iff regime == undefined
  Regime regime = Regime::undefined;
  std::string source;
  std::string note;
  std::vector<AttachedBound> bounds;
};

/// Connected Turán number ex^conn_r(n, BP_k) where a closed form is known,
/// dispatched on k relative to r. Requires n >= r >= 2 and k >= 2.
FormulaResult conn_bp_value(int n, int r, int k);

enum class ClassicalBound { kostochka_luo, gkl_small, gkl_large, dgmt, kopylov, fkl_conn, gsz21 };
enum class CycleBound { glsz_small, glsz_eq, multi, egmstz, fkl_cycle };

/// Cited bounds for Berge paths. Throws ParameterError outside the cited range.
FormulaResult classical_bound(ClassicalBound selector, int n, int r, int k);
/// Cited values and bounds for BC_{>=k}. Throws ParameterError outside the cited range.
FormulaResult bc_value(CycleBound selector, int n, int r, int k);

/// Smallest n0 >= r such that n - r + 1 >= (r-1) floor((n-1)/r) for all n >= n0.
int glsz_eq_crossover(int r);

std::optional<ClassicalBound> parse_classical_bound(const std::string& name);
std::optional<CycleBound> parse_cycle_bound(const std::string& name);
std::string to_string(ClassicalBound selector);
std::string to_string(CycleBound selector);

/// Kostochka-Luo bound max{k-1, kn/(2r-k+4)} when 3 <= k <= r, else nullopt.
std::optional<Rational> kostochka_luo_bound(int n, int r, int k);

}  // namespace bergepath
