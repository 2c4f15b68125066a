#pragma once

// Shared generators and independent oracles for the test suites.  The
// oracles deliberately avoid the Gram-system machinery they check.

#include <map>
#include <random>
#include <vector>

#include "macd/exactalg.hpp"
#include "macd/macdonald.hpp"
#include "macd/roota.hpp"
#include "macd/weightalg.hpp"

namespace macd::test {

inline LaurentPoly random_laurent(std::mt19937& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> den_pick(0, 2);
  std::uniform_int_distribution<int> expo(-6, 6);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> cden(1, 3);
  const std::int64_t den = std::vector<std::int64_t>{1, 2, 4}[static_cast<std::size_t>(den_pick(rng))];
  std::vector<LaurentPoly::Term> terms;
  const int t = nterms(rng);
  for (int i = 0; i < t; ++i) terms.emplace_back(expo(rng), Rational(num(rng), cden(rng)));
  for (auto& [e, c] : terms) c.canonicalize();
  return {den, std::move(terms)};
}

inline LaurentPoly random_nonzero_laurent(std::mt19937& rng, int max_terms = 4) {
  for (;;) {
    LaurentPoly p = random_laurent(rng, max_terms);
    if (!p.is_zero()) return p;
  }
}

inline ExactScalar random_scalar(std::mt19937& rng) {
  return {random_laurent(rng, 3), random_nonzero_laurent(rng, 3)};
}

inline ExactScalar random_nonzero_scalar(std::mt19937& rng) {
  return {random_nonzero_laurent(rng, 3), random_nonzero_laurent(rng, 3)};
}

// ---------------------------------------------------------------- Kostka

/// Number of semistandard tableaux of shape lam with content mu (entries 1..n).
inline long kostka(const std::vector<int>& lam, const std::vector<int>& mu) {
  const std::size_t n = mu.size();
  // Fill value by value: value v occupies a horizontal strip between the
  // shapes filled by 1..v-1 and 1..v.
  long count = 0;
  std::vector<int> shape(lam.size(), 0);
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      if (shape == lam) ++count;
      return;
    }
    // distribute mu[v] cells as a horizontal strip row by row
    std::vector<int> next = shape;
    auto strip = [&](auto&& strip_self, std::size_t row, int left) -> void {
      if (row == lam.size()) {
        if (left == 0) {
          std::vector<int> saved = shape;
          shape = next;
          self(self, v + 1);
          shape = saved;
        }
        return;
      }
      // cells added in this row must sit above the previous row of `shape`
      const int cap_row = lam[row];
      const int cap_strip = row == 0 ? cap_row : std::min(cap_row, shape[row - 1]);
      for (int add = 0; shape[row] + add <= cap_strip && add <= left; ++add) {
        next[row] = shape[row] + add;
        strip_self(strip_self, row + 1, left - add);
      }
      next[row] = shape[row];
    };
    strip(strip, 0, mu[v]);
  };
  rec(rec, 0);
  return count;
}

/// Weyl character of a dominant weight in the orbit-sum basis, via Kostka
/// numbers.  Keys are canonical dominant weights.
inline std::map<Weight, long> schur_orbit_expansion(const Weight& lam) {
  const int n = lam.rank();
  std::vector<int> part(lam.coords().begin(), lam.coords().end());
  const int size = lam.size();
  std::map<Weight, long> out;
  // all partitions mu of `size` with at most n parts
  std::vector<int> mu(static_cast<std::size_t>(n), 0);
  auto gen = [&](auto&& self, int idx, int left, int maxpart) -> void {
    if (idx == n) {
      if (left == 0) {
        const long K = kostka(part, mu);
        if (K) out[Weight(mu)] += K;
      }
      return;
    }
    for (int v = std::min(left, maxpart); v >= 0; --v) {
      mu[static_cast<std::size_t>(idx)] = v;
      self(self, idx + 1, left - v, v);
    }
    mu[static_cast<std::size_t>(idx)] = 0;
  };
  gen(gen, 0, size, size);
  return out;
}

// ------------------------------------------------- two-variable formula

/// (a; q^2)_m with a = q^{2e}.
inline LaurentPoly q_pochhammer(std::int64_t e, int m) {
  LaurentPoly p = 1;
  for (int j = 0; j < m; ++j) p *= LaurentPoly(1) - LaurentPoly::q_power(QExponent(2 * e + 2 * j));
  return p;
}

/// P_{m omega_1} for n = 2 from the closed two-variable formula
///   (Q;Q)_m/(T;Q)_m sum_i (T;Q)_i (T;Q)_{m-i} / ((Q;Q)_i (Q;Q)_{m-i}) x1^i x2^{m-i},
/// Q = q^2, T = q^{2k}.
inline GroupAlgebraElement two_variable_macdonald(int m, int k) {
  GroupAlgebraElement f(2);
  const ExactScalar pre(q_pochhammer(1, m), q_pochhammer(k, m));
  for (int i = 0; i <= m; ++i) {
    const ExactScalar c(q_pochhammer(k, i) * q_pochhammer(k, m - i), q_pochhammer(1, i) * q_pochhammer(1, m - i));
    f.add_term(Weight({i, m - i}), pre * c);
  }
  return f;
}

// ---------------------------------------------------------- P-basis solve

/// Coefficients of a W-invariant f in the P basis, by peeling off the
/// dominance-maximal orbit at each step (P_lam is unitriangular).
inline std::map<Weight, ExactScalar> expand_in_p_basis(GroupAlgebraElement f, const MacdonaldContext& ctx) {
  std::map<Weight, ExactScalar> out;
  while (!f.is_zero()) {
    // a dominant weight of the support that no other dominant one dominates
    std::vector<Weight> dom;
    for (const auto& [w, c] : f.terms())
      if (w.is_dominant()) dom.push_back(w);
    if (dom.empty()) throw std::logic_error("expand_in_p_basis: no dominant weight in support");
    Weight top = dom.front();
    for (const auto& w : dom)
      if (w != top && dominance_leq(top, w)) top = w;
    const ExactScalar c = f.coefficient(top);
    out[top] = c;
    f -= macdonald_poly(top, ctx).scaled(c);
  }
  return out;
}

/// <f, g>_k through the full product f * bar(g) * Delta.
inline ExactScalar inner_product_by_product(const GroupAlgebraElement& f, const GroupAlgebraElement& g,
                                            const MacdonaldContext& ctx) {
  const GroupAlgebraElement prod = f * bar(g) * to_exact(ctx.kernel());
  return constant_term(prod) * ExactScalar(Rational(Rational(1) / ctx.weyl_order()));
}

}  // namespace macd::test
