#include "macd/exactalg.hpp"

#include <numeric>

namespace macd {

Fraction::Fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ArithmeticError("Fraction: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  const std::int64_t l = std::lcm(a.den_, b.den_);
  return {a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l};
}

Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }

Fraction operator*(const Fraction& a, const Fraction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

Fraction operator/(const Fraction& a, const Fraction& b) {
  if (b.num_ == 0) throw ArithmeticError("Fraction: division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::string Fraction::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace macd
