// Exact division and gcd in Q[u, u^-1].
//
// Both routines strip the unit u^e from each operand, then substitute
// v = u^g where g is the gcd of all remaining exponent gaps, and work
// with dense polynomials in v.  gcd(f(v^g), h(v^g)) = gcd(f, h)(v^g), so
// the substitution is exact and keeps the dense degree small.

#include <algorithm>
#include <numeric>

#include "macd/exactalg.hpp"

namespace macd {

namespace {

template <class C>
void trim(std::vector<C>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

template <class C>
int degree(const std::vector<C>& p) {
  return static_cast<int>(p.size()) - 1;
}

struct DensePair {
  std::int64_t den;       // common resolution
  std::int64_t stride;    // v = u^stride
  std::int64_t low_a, low_b;
  std::vector<Rational> a, b;
};

DensePair to_dense(const LaurentPoly& x, const LaurentPoly& y) {
  auto [a, b] = lift_common(x, y);
  DensePair d;
  d.den = a.resolution();
  d.low_a = a.terms().front().first;
  d.low_b = b.terms().front().first;
  std::int64_t g = 0;
  for (const auto& t : a.terms()) g = std::gcd(g, t.first - d.low_a);
  for (const auto& t : b.terms()) g = std::gcd(g, t.first - d.low_b);
  d.stride = g == 0 ? 1 : g;
  auto fill = [&](const LaurentPoly& p, std::int64_t low, std::vector<Rational>& out) {
    out.assign(static_cast<std::size_t>((p.terms().back().first - low) / d.stride + 1), 0);
    for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>((e - low) / d.stride)] = c;
  };
  fill(a, d.low_a, d.a);
  fill(b, d.low_b, d.b);
  return d;
}

LaurentPoly from_dense(const std::vector<Rational>& p, std::int64_t den, std::int64_t low,
                       std::int64_t stride) {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) terms.emplace_back(low + static_cast<std::int64_t>(i) * stride, p[i]);
  return LaurentPoly(den, std::move(terms));
}

using ZPoly = std::vector<Integer>;

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) g = ::gcd(g, c);
  return g;
}

ZPoly primitive_part(ZPoly p) {
  Integer g = content(p);
  if (g == 0) return p;
  if (p.back() < 0) g = -g;
  for (auto& c : p) c /= g;
  return p;
}

ZPoly to_integer_primitive(const std::vector<Rational>& p) {
  Integer l = 1;
  for (const auto& c : p) l = lcm(l, Integer(c.get_den()));
  ZPoly z(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) z[i] = Integer(p[i].get_num()) * (l / p[i].get_den());
  return primitive_part(std::move(z));
}

// lc(b)^(deg a - deg b + 1) * a mod b
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const int db = degree(b);
  const Integer& lb = b.back();
  int e = degree(a) - db + 1;
  while (!a.empty() && degree(a) >= db) {
    const Integer la = a.back();
    const int shift = degree(a) - db;
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= la * b[static_cast<std::size_t>(i)];
    trim(a);
    --e;
  }
  if (e > 0) {
    Integer m;
    mpz_pow_ui(m.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& c : a) c *= m;
  }
  return a;
}

Integer power(const Integer& b, int e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

// Primitive gcd of two non-zero integer polynomials, positive leading coefficient.
ZPoly subresultant_gcd(ZPoly a, ZPoly b) {
  if (degree(a) < degree(b)) std::swap(a, b);
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  Integer g = 1;
  Integer h = 1;
  for (;;) {
    const int delta = degree(a) - degree(b);
    ZPoly r = pseudo_remainder(a, b);
    if (r.empty()) return primitive_part(std::move(b));
    if (degree(r) == 0) return ZPoly{1};
    a = std::move(b);
    const Integer divisor = g * power(h, delta);
    for (auto& c : r) c /= divisor;
    b = std::move(r);
    g = a.back();
    if (delta == 0) continue;
    h = power(g, delta) / power(h, delta - 1);
  }
}

}  // namespace

LaurentPoly divide_exact(const LaurentPoly& x, const LaurentPoly& y) {
  if (y.is_zero()) throw ArithmeticError("division by zero polynomial");
  if (x.is_zero()) return {};
  if (y.is_monomial()) {
    const auto& [e, c] = y.terms().front();
    return x.shifted(-QExponent(e, y.resolution())).scaled(1 / c);
  }
  DensePair d = to_dense(x, y);
  std::vector<Rational>& r = d.a;
  const std::vector<Rational>& b = d.b;
  if (degree(r) < degree(b)) throw ArithmeticError("inexact polynomial division");
  std::vector<Rational> quot(static_cast<std::size_t>(degree(r) - degree(b) + 1), 0);
  const Rational lb = b.back();
  for (int i = degree(r); i >= degree(b); --i) {
    const Rational c = r[static_cast<std::size_t>(i)] / lb;
    if (c == 0) continue;
    const int shift = i - degree(b);
    quot[static_cast<std::size_t>(shift)] = c;
    for (int j = 0; j <= degree(b); ++j) r[static_cast<std::size_t>(j + shift)] -= c * b[static_cast<std::size_t>(j)];
  }
  if (std::any_of(r.begin(), r.end(), [](const Rational& c) { return c != 0; }))
    throw ArithmeticError("inexact polynomial division");
  return from_dense(quot, d.den, d.low_a - d.low_b, d.stride);
}

LaurentPoly gcd(const LaurentPoly& x, const LaurentPoly& y) {
  auto monic_low0 = [](const LaurentPoly& p) {
    const auto low = p.low_exponent();
    return p.shifted(-low).scaled(1 / p.leading_coefficient());
  };
  if (x.is_zero() && y.is_zero()) return {};
  if (x.is_zero()) return monic_low0(y);
  if (y.is_zero()) return monic_low0(x);
  if (x.is_monomial() || y.is_monomial()) return LaurentPoly::one();
  DensePair d = to_dense(x, y);
  ZPoly g = subresultant_gcd(to_integer_primitive(d.a), to_integer_primitive(d.b));
  if (g.size() == 1) return LaurentPoly::one();
  std::vector<Rational> q(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    q[i] = Rational(g[i], g.back());
    q[i].canonicalize();
  }
  return from_dense(q, d.den, 0, d.stride);
}

}  // namespace macd
