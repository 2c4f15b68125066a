#pragma once

// Macdonald polynomials P_lambda(q, q^k) for A_{n-1}, integer k >= 1.
//
// P_lambda = m_lambda + sum_{mu < lambda} c_{lambda mu} m_mu is found by
// requiring orthogonality to every lower orbit sum under
//   <f, g>_k = (1/n!) [f * bar(g) * Delta_{q,q^k}]_0 ,
//   Delta_{q,q^k} = prod_{alpha in R} prod_{i=0}^{k-1} (1 - q^{2i} e^alpha).
// The Gram system has Laurent-polynomial entries and is solved by
// fraction-free (Bareiss) elimination followed by back substitution in the
// fraction field.

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "macd/exactalg.hpp"
#include "macd/roota.hpp"
#include "macd/weightalg.hpp"

namespace macd {

/// The Gram system of a P_lambda computation had no unique solution.
class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cache document failed validation.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Delta_{q,q^k}, expanded.
template <CoefficientRing S = ExactScalar>
GroupAlgebra<S> delta_kernel(int n, int k) {
  if (k < 1) throw PreconditionError("delta_kernel: k must be >= 1");
  const RootData& rd = root_data(n);
  GroupAlgebra<S> out = GroupAlgebra<S>::constant(n, S(1));
  for (const auto& alpha : rd.roots())
    for (int i = 0; i < k; ++i) {
      GroupAlgebra<S> factor = GroupAlgebra<S>::constant(n, S(1));
      factor.add_term(alpha, -S::q_power(QExponent(2 * i)));
      out = out * factor;
    }
  return out;
}

/// chi_0 = e^{(k-1) rho} prod_{alpha > 0} prod_{i=1}^{k-1} (1 - q^{2i} e^{-alpha}).
template <CoefficientRing S = ExactScalar>
GroupAlgebra<S> chi0(int n, int k) {
  if (k < 1) throw PreconditionError("chi0: k must be >= 1");
  const RootData& rd = root_data(n);
  GroupAlgebra<S> out = GroupAlgebra<S>::monomial((k - 1) * rd.rho);
  for (const auto& alpha : rd.positive_roots)
    for (int i = 1; i < k; ++i) {
      GroupAlgebra<S> factor = GroupAlgebra<S>::constant(n, S(1));
      factor.add_term(-alpha, -S::q_power(QExponent(2 * i)));
      out = out * factor;
    }
  return out;
}

/// A computed P_lambda: the element, its m-basis coefficients and the same
/// element with one common denominator.
struct MacdonaldPolynomial {
  Weight lambda;
  GroupAlgebraElement element;
  std::map<Weight, ExactScalar> coefficients;  // mu -> c_{lambda mu}; lambda -> 1
  ClearedElement cleared;
};

class MacdonaldContext {
 public:
  MacdonaldContext(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  const RootData& roots() const { return *roots_; }
  /// Delta_{q,q^k}; its coefficients are Laurent polynomials.
  const PolyElement& kernel() const { return kernel_; }
  /// n! as a rational.
  const Rational& weyl_order() const { return weyl_order_; }

  /// <m_mu, m_nu>_k, memoized.
  LaurentPoly orbit_pairing(const Weight& mu, const Weight& nu) const;

  std::shared_ptr<const MacdonaldPolynomial> find(const Weight& lam) const;
  /// Insert unless present; returns the stored entry either way.
  std::shared_ptr<const MacdonaldPolynomial> insert(std::shared_ptr<const MacdonaldPolynomial> p) const;
  std::size_t cache_size() const;

  /// {n, k, entries: [{lambda, coeffs: [{mu, value}]}]}
  nlohmann::json cache_to_json() const;
  /// Validates every entry (dominance, triangularity, unit leading
  /// coefficient) before adding any; throws CacheError.
  std::size_t load_cache(const nlohmann::json& doc) const;

 private:
  int n_;
  int k_;
  const RootData* roots_;
  PolyElement kernel_;
  Rational weyl_order_;

  mutable std::shared_mutex poly_mutex_;
  mutable std::map<Weight, std::shared_ptr<const MacdonaldPolynomial>> polys_;
  mutable std::mutex gram_mutex_;
  mutable std::map<std::pair<Weight, Weight>, LaurentPoly> gram_;
};

/// <f, g>_k.  The constant term of f * bar(g) * Delta is summed directly
/// over pairs of support weights instead of forming the product.
template <CoefficientRing S>
S inner_product(const GroupAlgebra<S>& f, const GroupAlgebra<S>& g, const MacdonaldContext& ctx) {
  if (f.rank() != ctx.n() || g.rank() != ctx.n()) throw RankError("inner_product: rank mismatch");
  S total{};
  const auto& delta = ctx.kernel().terms();
  for (const auto& [b, fb] : f.terms())
    for (const auto& [c, gc] : g.terms()) {
      auto it = delta.find(c - b);
      if (it != delta.end()) total += fb * gc * S(it->second);
    }
  return total * S(LaurentPoly(Rational(1) / ctx.weyl_order()));
}

const MacdonaldPolynomial& macdonald_entry(const Weight& lam, const MacdonaldContext& ctx);
const GroupAlgebraElement& macdonald_poly(const Weight& lam, const MacdonaldContext& ctx);

/// chi_lambda = P_lambda * chi_0.
GroupAlgebraElement chi(const Weight& lam, const MacdonaldContext& ctx);

/// <P_lambda, P_lambda>_k by constant term.
ExactScalar norm(const Weight& lam, const MacdonaldContext& ctx);

/// P_lambda(q^{2 xi}).
ExactScalar evaluate_poly(const Weight& lam, const Weight& xi, const MacdonaldContext& ctx);

/// Checks that `coeffs` describes m_lambda + lower dominant terms.
bool is_triangular(const Weight& lam, const std::map<Weight, ExactScalar>& coeffs);

}  // namespace macd
