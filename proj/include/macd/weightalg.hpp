#pragma once

// The group algebra of the weight lattice: finite sums  sum_w c_w e^w.
//
// GroupAlgebra is templated on the coefficient ring.  GroupAlgebraElement
// (ExactScalar coefficients) is the general type; PolyElement keeps
// Laurent-polynomial coefficients and is what the heavy operator and
// recurrence checks run on after denominators are cleared.

#include <concepts>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "macd/exactalg.hpp"
#include "macd/roota.hpp"

namespace macd {

template <class S>
concept CoefficientRing = requires(S a, const S& b, QExponent e) {
  { S(1) };
  { S::q_power(e) } -> std::convertible_to<S>;
  { a += b } -> std::same_as<S&>;
  { a -= b } -> std::same_as<S&>;
  { b * b } -> std::convertible_to<S>;
  { -b } -> std::convertible_to<S>;
  { b.is_zero() } -> std::convertible_to<bool>;
  { b.to_string() } -> std::convertible_to<std::string>;
};

template <CoefficientRing S>
class GroupAlgebra {
 public:
  using Map = std::map<Weight, S>;

  explicit GroupAlgebra(int n = 2) : n_(n) {}

  /// c * e^w
  static GroupAlgebra monomial(const Weight& w, S c = S(1)) {
    GroupAlgebra f(w.rank());
    f.add_term(w, std::move(c));
    return f;
  }
  static GroupAlgebra constant(int n, S c) { return monomial(Weight::zero(n), std::move(c)); }

  int rank() const { return n_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  S coefficient(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? S() : it->second;
  }

  void add_term(const Weight& w, const S& c) {
    check_rank(w.rank());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  GroupAlgebra operator-() const {
    GroupAlgebra r(n_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
  }
  GroupAlgebra& operator+=(const GroupAlgebra& o) {
    check_rank(o.n_);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  GroupAlgebra& operator-=(const GroupAlgebra& o) { return *this += -o; }
  friend GroupAlgebra operator+(GroupAlgebra a, const GroupAlgebra& b) { return a += b; }
  friend GroupAlgebra operator-(GroupAlgebra a, const GroupAlgebra& b) { return a -= b; }

  friend GroupAlgebra operator*(const GroupAlgebra& f, const GroupAlgebra& g) {
    f.check_rank(g.n_);
    GroupAlgebra r(f.n_);
    for (const auto& [a, ca] : f.terms_)
      for (const auto& [b, cb] : g.terms_) r.add_term(a + b, ca * cb);
    return r;
  }
  GroupAlgebra& operator*=(const GroupAlgebra& o) { return *this = *this * o; }

  GroupAlgebra scaled(const S& c) const {
    GroupAlgebra r(n_);
    if (c.is_zero()) return r;
    for (const auto& [w, x] : terms_) r.add_term(w, x * c);
    return r;
  }

  /// Apply `fn` to every coefficient (zero results are dropped).
  template <class Fn>
  auto map_coefficients(Fn&& fn) const {
    using T = std::decay_t<decltype(fn(std::declval<const S&>()))>;
    GroupAlgebra<T> r(n_);
    for (const auto& [w, c] : terms_) r.add_term(w, fn(c));
    return r;
  }

  friend bool operator==(const GroupAlgebra& a, const GroupAlgebra& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// "e[2,0,0]*(1)+e[1,1,0]*(...)" in weight order.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
      if (!s.empty()) s += "+";
      s += "e[" + w.to_string() + "]*(" + c.to_string() + ")";
    }
    return s;
  }

 private:
  void check_rank(int n) const {
    if (n != n_) throw RankError("group algebra rank mismatch");
  }

  int n_;
  Map terms_;
};

using GroupAlgebraElement = GroupAlgebra<ExactScalar>;
using PolyElement = GroupAlgebra<LaurentPoly>;

template <CoefficientRing S>
GroupAlgebra<S> ga_mul(const GroupAlgebra<S>& f, const GroupAlgebra<S>& g) {
  return f * g;
}

/// e^w -> e^{-w}; coefficients untouched.
template <CoefficientRing S>
GroupAlgebra<S> bar(const GroupAlgebra<S>& f) {
  GroupAlgebra<S> r(f.rank());
  for (const auto& [w, c] : f.terms()) r.add_term(-w, c);
  return r;
}

template <CoefficientRing S>
S constant_term(const GroupAlgebra<S>& f) {
  return f.coefficient(Weight::zero(f.rank()));
}

/// Orbit sum m_lam of a dominant weight.
template <CoefficientRing S = ExactScalar>
GroupAlgebra<S> orbit_sum(const Weight& lam) {
  if (!lam.is_dominant())
    throw PreconditionError("orbit_sum: " + lam.to_string() + " is not dominant");
  GroupAlgebra<S> f(lam.rank());
  for (const auto& w : weyl_orbit(lam)) f.add_term(w, S(1));
  return f;
}

template <CoefficientRing S>
bool is_w_invariant(const GroupAlgebra<S>& f) {
  for (const auto& [w, c] : f.terms())
    for (const auto& v : weyl_orbit(w)) {
      auto it = f.terms().find(v);
      if (it == f.terms().end() || !(it->second == c)) return false;
    }
  return true;
}

/// Substitute e^b -> q^{2(b, xi)}.
template <CoefficientRing S>
S evaluate_at(const GroupAlgebra<S>& f, const Weight& xi) {
  S total{};
  for (const auto& [w, c] : f.terms()) total += c * S::q_power(Fraction(2) * pairing(w, xi));
  return total;
}

/// Character of the r-th exterior power of C^n.
template <CoefficientRing S = ExactScalar>
GroupAlgebra<S> char_lambda_r(int n, int r) {
  GroupAlgebra<S> f(n);
  for (const auto& w : lambda_r_weights(n, r)) f.add_term(w, S(1));
  return f;
}

/// Orbit sum of omega_r; equal to char_lambda_r since omega_r is minuscule.
template <CoefficientRing S = ExactScalar>
GroupAlgebra<S> orbit_char_lambda_r(int n, int r) {
  lambda_r_weights(n, r);  // range check
  return orbit_sum<S>(Weight::fundamental(n, r));
}

/// q-dimension prod_{alpha > 0} [(alpha, lam + rho)] / [(alpha, rho)].
ExactScalar qdim(const Weight& lam, int n);

/// f with every coefficient q -> q^{-1}.
GroupAlgebraElement q_inverted(const GroupAlgebraElement& f);

/// Embed Laurent coefficients into the fraction field.
GroupAlgebraElement to_exact(const PolyElement& f);

/// f = numerator / denominator with a single common denominator.
struct ClearedElement {
  PolyElement numerator;
  LaurentPoly denominator;
};
ClearedElement clear_denominators(const GroupAlgebraElement& f);
/// numerator / denominator, coefficient-wise in canonical form.
GroupAlgebraElement divide(const PolyElement& numerator, const LaurentPoly& denominator);

}  // namespace macd
