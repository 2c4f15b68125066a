#include <algorithm>
#include <numeric>
#include <ostream>

#include "macd/exactalg.hpp"

namespace macd {

namespace {

// Sort by exponent, merge equal exponents, drop zeros.
void merge_terms(std::vector<LaurentPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::int64_t e = terms[i].first;
    Rational c = terms[i].second;
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].first == e; ++j) c += terms[j].second;
    if (c != 0) terms[out++] = {e, std::move(c)};
    i = j;
  }
  terms.resize(out);
}

}  // namespace

std::string rational_to_string(const Rational& r) { return r.get_str(); }

LaurentPoly::LaurentPoly(int c) {
  if (c != 0) terms_.emplace_back(0, Rational(c));
}

LaurentPoly::LaurentPoly(Rational c) {
  if (c != 0) terms_.emplace_back(0, std::move(c));
}

LaurentPoly::LaurentPoly(std::int64_t den, std::vector<Term> terms)
    : den_(den), terms_(std::move(terms)) {
  if (den_ <= 0) throw ArithmeticError("LaurentPoly: resolution must be positive");
  merge_terms(terms_);
  normalize();
}

LaurentPoly LaurentPoly::q_power(QExponent e, Rational c) {
  return LaurentPoly(e.den(), {{e.num(), std::move(c)}});
}

void LaurentPoly::normalize() {
  if (terms_.empty()) {
    den_ = 1;
    return;
  }
  std::int64_t g = den_;
  for (const auto& [e, c] : terms_) g = std::gcd(g, e);
  if (g > 1) {
    den_ /= g;
    for (auto& t : terms_) t.first /= g;
  }
}

LaurentPoly LaurentPoly::lifted(std::int64_t den) const {
  LaurentPoly r = *this;
  const std::int64_t f = den / den_;
  r.den_ = den;
  if (f != 1)
    for (auto& t : r.terms_) t.first *= f;
  return r;
}

std::pair<LaurentPoly, LaurentPoly> lift_common(const LaurentPoly& a, const LaurentPoly& b) {
  const std::int64_t l = std::lcm(a.den_, b.den_);
  return {a.lifted(l), b.lifted(l)};
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first == 0);
}

QExponent LaurentPoly::low_exponent() const {
  if (terms_.empty()) throw ArithmeticError("low_exponent of zero polynomial");
  return {terms_.front().first, den_};
}

QExponent LaurentPoly::high_exponent() const {
  if (terms_.empty()) throw ArithmeticError("high_exponent of zero polynomial");
  return {terms_.back().first, den_};
}

const Rational& LaurentPoly::leading_coefficient() const {
  if (terms_.empty()) throw ArithmeticError("leading_coefficient of zero polynomial");
  return terms_.back().second;
}

Rational LaurentPoly::coefficient(QExponent e) const {
  if ((e.num() * den_) % e.den() != 0) return 0;
  const std::int64_t u = e.num() * den_ / e.den();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), u,
                             [](const Term& t, std::int64_t x) { return t.first < x; });
  return (it != terms_.end() && it->first == u) ? it->second : Rational(0);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  auto [a, b] = lift_common(*this, o);
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == a.terms_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      Rational c = i->second + j->second;
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  den_ = a.den_;
  terms_ = std::move(out);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  auto [a, b] = lift_common(x, y);
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.emplace_back(ea + eb, ca * cb);
  return LaurentPoly(a.den_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

LaurentPoly LaurentPoly::shifted(QExponent e) const {
  if (e.num() == 0 || is_zero()) return *this;
  const std::int64_t l = std::lcm(den_, e.den());
  LaurentPoly r = lifted(l);
  const std::int64_t s = e.num() * (l / e.den());
  for (auto& t : r.terms_) t.first += s;
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::q_inverted() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first = -t.first;
  std::reverse(r.terms_.begin(), r.terms_.end());
  return r;
}

Rational LaurentPoly::at_one() const {
  Rational s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    out += rational_to_string(abs(c));
    if (e != 0) out += "*q^(" + Fraction(e, den_).to_string() + ")";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly qint(std::int64_t m) {
  if (m < 0) return -qint(-m);
  std::vector<LaurentPoly::Term> terms;
  for (std::int64_t j = 0; j < m; ++j) terms.emplace_back(m - 1 - 2 * j, Rational(1));
  return LaurentPoly(1, std::move(terms));
}

}  // namespace macd
