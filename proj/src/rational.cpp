#include "bergepath/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace bergepath {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  std::size_t used = 0;
  if (slash == std::string::npos) {
    const auto v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument("bad rational: " + text);
    return Rational(v);
  }
  const auto p = std::stoll(text.substr(0, slash), &used);
  if (used != slash) throw std::invalid_argument("bad rational: " + text);
  const auto rest = text.substr(slash + 1);
  const auto q = std::stoll(rest, &used);
  if (used != rest.size()) throw std::invalid_argument("bad rational: " + text);
  return Rational(p, q);
}

Rational operator+(Rational a, Rational b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(Rational a, Rational b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(Rational a, Rational b) { return Rational(a.num_ * b.num_, a.den_ * b.den_); }
Rational operator/(Rational a, Rational b) { return Rational(a.num_ * b.den_, a.den_ * b.num_); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

Rational max(Rational a, Rational b) { return a < b ? b : a; }

std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

}  // namespace bergepath
