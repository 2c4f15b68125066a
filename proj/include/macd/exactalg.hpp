#pragma once

// Exact arithmetic in the field of rational functions of q.
//
// Every value lives in Q(u) with u a root of q.  A LaurentPoly records its
// own resolution `den` (u = q^(1/den)) and keeps it minimal, so the same
// element always has the same representation and equality is syntactic.
// Inside a rank-n context den always divides 2n.

#include <cstdint>
#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace macd {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for arithmetic that has no answer in the field (0 divisor, pole, ...).
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when the text form of a scalar or weight cannot be parsed.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Small exact rational with 64-bit parts, reduced, positive denominator.
/// Used for pairings on the weight lattice and for exponents of q.
class Fraction {
 public:
  constexpr Fraction() = default;
  Fraction(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Fraction operator-() const { return {-num_, den_}; }
  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  friend Fraction operator*(const Fraction& a, const Fraction& b);
  friend Fraction operator/(const Fraction& a, const Fraction& b);
  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// An exponent of q.  Within rank n, 2n * value is an integer.
using QExponent = Fraction;

/// Finite sum of c_e u^e with rational c_e != 0 and u = q^(1/den).
class LaurentPoly {
 public:
  using Term = std::pair<std::int64_t, Rational>;

  LaurentPoly() = default;
  LaurentPoly(int c);  // NOLINT: integers embed implicitly
  explicit LaurentPoly(Rational c);
  /// Build from u-exponents at resolution `den`; terms may repeat or vanish.
  LaurentPoly(std::int64_t den, std::vector<Term> terms);

  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return LaurentPoly(1); }
  /// c * q^e
  static LaurentPoly q_power(QExponent e, Rational c = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  std::int64_t resolution() const { return den_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Exponents in q of the lowest and highest terms (requires non-zero).
  QExponent low_exponent() const;
  QExponent high_exponent() const;
  const Rational& leading_coefficient() const;
  /// Coefficient of q^e (zero if absent).
  Rational coefficient(QExponent e) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.den_ == b.den_ && a.terms_ == b.terms_;
  }

  LaurentPoly scaled(const Rational& c) const;
  /// Multiply by q^e.
  LaurentPoly shifted(QExponent e) const;
  /// q -> q^{-1}.
  LaurentPoly q_inverted() const;
  /// Value at u = 1.
  Rational at_one() const;

  std::string to_string() const;

 private:
  void normalize();
  LaurentPoly lifted(std::int64_t den) const;

  friend std::pair<LaurentPoly, LaurentPoly> lift_common(const LaurentPoly&,
                                                         const LaurentPoly&);

  std::int64_t den_ = 1;
  std::vector<Term> terms_;  // ascending exponent
};

std::pair<LaurentPoly, LaurentPoly> lift_common(const LaurentPoly& a, const LaurentPoly& b);

/// a / b when b divides a in Q[u, u^-1]; throws ArithmeticError otherwise.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Monic gcd up to units u^e, lowest exponent 0.  gcd(0, 0) = 0.
/// Computed over Z by the subresultant remainder sequence.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Element of Q(q^(1/2n)): numerator / denominator in canonical form.
///
/// Canonical: gcd(num, den) = 1, den monic with lowest exponent 0
/// (any power of q is carried by the numerator), zero is 0/1.
class ExactScalar {
 public:
  ExactScalar() : den_(1) {}
  ExactScalar(int c) : num_(c), den_(1) {}  // NOLINT
  ExactScalar(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  ExactScalar(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  ExactScalar(LaurentPoly num, LaurentPoly den);

  static ExactScalar zero() { return {}; }
  static ExactScalar one() { return {1}; }
  static ExactScalar q_power(QExponent e, Rational c = 1) {
    return {LaurentPoly::q_power(e, std::move(c))};
  }

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);
  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  ExactScalar inverse() const;
  ExactScalar q_inverted() const;

  /// Canonical text: poly, or (poly)/(poly); exponents are those of q.
  std::string to_string() const;
  static ExactScalar parse(std::string_view text);

 private:
  struct Canonical {};
  ExactScalar(Canonical, LaurentPoly num, LaurentPoly den)
      : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

enum class ArithOp { add, sub, mul, div };

ExactScalar scalar_arith(const ExactScalar& a, const ExactScalar& b, ArithOp op);

/// q-integer [m] = (q^m - q^-m) / (q - q^-1).
LaurentPoly qint(std::int64_t m);

/// Substitute q = 1; throws ArithmeticError at a pole.
Rational evaluate_limit_q1(const ExactScalar& s);

/// Parses the poly production of the scalar grammar.
LaurentPoly parse_laurent(std::string_view text);

std::string rational_to_string(const Rational& r);

}  // namespace macd
