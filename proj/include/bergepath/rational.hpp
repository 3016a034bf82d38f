#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace bergepath {

/// Exact rational with a positive denominator, always in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit from integers
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  std::int64_t floor() const;

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  /// Accepts "p" or "p/q"; throws std::invalid_argument.
  static Rational parse(const std::string& text);

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend Rational operator/(Rational a, Rational b);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational max(Rational a, Rational b);

/// Binomial coefficient; 0 when k < 0 or k > n.
std::int64_t binom(std::int64_t n, std::int64_t k);

}  // namespace bergepath
