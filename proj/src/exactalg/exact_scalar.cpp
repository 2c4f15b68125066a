#include <cctype>
#include <ostream>

#include "macd/exactalg.hpp"

namespace macd {

namespace {

// Make a denominator monic with lowest exponent 0, compensating in num.
void normalize_units(LaurentPoly& num, LaurentPoly& den) {
  const QExponent low = den.low_exponent();
  if (low != QExponent(0)) {
    den = den.shifted(-low);
    num = num.shifted(-low);
  }
  const Rational lc = den.leading_coefficient();
  if (lc != 1) {
    const Rational inv = 1 / lc;
    den = den.scaled(inv);
    num = num.scaled(inv);
  }
}

}  // namespace

ExactScalar::ExactScalar(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

void ExactScalar::canonicalize() {
  if (den_.is_zero()) throw ArithmeticError("ExactScalar: zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly::one();
    return;
  }
  if (!den_.is_monomial()) {
    LaurentPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  normalize_units(num_, den_);
}

ExactScalar ExactScalar::operator-() const { return {Canonical{}, -num_, den_}; }

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  // gcd(a + c*b, b) = gcd(a, b) = 1: no reduction when one side is polynomial.
  if (o.den_.is_constant()) {
    num_ += o.num_ * den_;
    if (num_.is_zero()) den_ = LaurentPoly::one();
    return *this;
  }
  if (den_.is_constant()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    if (num_.is_zero()) den_ = LaurentPoly::one();
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    canonicalize();
    return *this;
  }
  const LaurentPoly g = gcd(den_, o.den_);
  const LaurentPoly b = divide_exact(den_, g);
  const LaurentPoly d = divide_exact(o.den_, g);
  num_ = num_ * d + o.num_ * b;
  den_ = den_ * d;
  canonicalize();
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) { return *this += -o; }

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  if (is_zero() || o.is_zero()) return *this = ExactScalar();
  // Cross-cancel; both inputs are reduced so the product needs no further gcd.
  LaurentPoly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_constant()) {
    const LaurentPoly g = gcd(a, d);
    if (!g.is_constant()) {
      a = divide_exact(a, g);
      d = divide_exact(d, g);
    }
  }
  if (!b.is_constant()) {
    const LaurentPoly g = gcd(c, b);
    if (!g.is_constant()) {
      c = divide_exact(c, g);
      b = divide_exact(b, g);
    }
  }
  num_ = a * c;
  den_ = b * d;
  normalize_units(num_, den_);
  return *this;
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero scalar");
  LaurentPoly num = den_;
  LaurentPoly den = num_;
  normalize_units(num, den);
  return {Canonical{}, std::move(num), std::move(den)};
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) { return *this *= o.inverse(); }

ExactScalar ExactScalar::q_inverted() const { return {num_.q_inverted(), den_.q_inverted()}; }

std::string ExactScalar::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << s.to_string(); }

ExactScalar scalar_arith(const ExactScalar& a, const ExactScalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw ArithmeticError("unknown arithmetic operation");
}

Rational evaluate_limit_q1(const ExactScalar& s) {
  const Rational d = s.denominator().at_one();
  if (d == 0) throw ArithmeticError("pole at q = 1: " + s.to_string());
  return s.numerator().at_one() / d;
}

// ---- parsing --------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  LaurentPoly poly() {
    LaurentPoly out;
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = get() == '-';
    for (;;) {
      LaurentPoly t = term();
      out += negative ? -t : t;
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
      negative = get() == '-';
    }
    return out;
  }

  ExactScalar scalar() {
    skip_ws();
    if (peek() != '(') return ExactScalar(poly());
    expect('(');
    LaurentPoly num = poly();
    expect(')');
    expect('/');
    expect('(');
    LaurentPoly den = poly();
    expect(')');
    if (den.is_zero()) throw ParseError("zero denominator in scalar");
    return {std::move(num), std::move(den)};
  }

  void finish() {
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
  }

 private:
  LaurentPoly term() {
    skip_ws();
    Rational c = 1;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = fraction_literal();
      has_coeff = true;
      skip_ws();
      if (peek() != '*') return LaurentPoly(c);
      get();
      skip_ws();
    }
    if (peek() != 'q') {
      if (!has_coeff) fail("expected coefficient or q");
      return LaurentPoly(c);
    }
    get();
    expect('^');
    expect('(');
    skip_ws();
    bool neg = false;
    if (peek() == '-' || peek() == '+') neg = get() == '-';
    std::int64_t num = integer();
    std::int64_t den = 1;
    skip_ws();
    if (peek() == '/') {
      get();
      den = integer();
      if (den == 0) fail("zero exponent denominator");
    }
    expect(')');
    return LaurentPoly::q_power(QExponent(neg ? -num : num, den), c);
  }

  Rational fraction_literal() {
    std::string digits = digit_run();
    if (peek() == '/' && pos_ + 1 < s_.size() &&
        std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      get();
      digits += "/" + digit_run();
    }
    Rational r(digits, 10);
    if (r.get_den() == 0) fail("zero denominator in coefficient");
    r.canonicalize();
    return r;
  }

  std::int64_t integer() {
    skip_ws();
    std::string d = digit_run();
    try {
      return std::stoll(d);
    } catch (const std::exception&) {
      fail("exponent out of range");
    }
  }

  std::string digit_run() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
  void expect(char c) {
    skip_ws();
    if (get() != c) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse scalar '" + std::string(s_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text) {
  Parser p(text);
  LaurentPoly out = p.poly();
  p.finish();
  return out;
}

ExactScalar ExactScalar::parse(std::string_view text) {
  Parser p(text);
  ExactScalar out = p.scalar();
  p.finish();
  return out;
}

}  // namespace macd
