#include "macd/operators.hpp"

#include <algorithm>
#include <map>

namespace macd {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void check_r(int r, int n) {
  if (r < 1 || r > n - 1)
    throw PreconditionError("r=" + std::to_string(r) + " out of range 1..n-1 for n=" + std::to_string(n));
}

void check_dominant(const Weight& w, const MacdonaldContext& ctx, const char* what) {
  if (w.rank() != ctx.n()) throw RankError(std::string(what) + ": rank mismatch");
  if (!w.is_dominant())
    throw PreconditionError(std::string(what) + ": " + w.to_string() + " is not dominant");
}

// 1 - c e^alpha
template <CoefficientRing S>
GroupAlgebra<S> binomial(int n, const S& constant, const Weight& alpha, const S& c) {
  GroupAlgebra<S> f = GroupAlgebra<S>::constant(n, constant);
  f.add_term(alpha, -c);
  return f;
}

}  // namespace

int exterior_degree(const Weight& nu) {
  const int n = nu.rank();
  for (int r = 1; r < n; ++r) {
    const auto ws = lambda_r_weights(n, r);
    if (std::find(ws.begin(), ws.end(), nu) != ws.end()) return r;
  }
  return 0;
}

template <CoefficientRing S>
GroupAlgebra<S> shift_apply(const GroupAlgebra<S>& f, const Weight& nu) {
  GroupAlgebra<S> out(f.rank());
  for (const auto& [w, c] : f.terms())
    out.add_term(w, c * S::q_power(Fraction(2) * pairing(nu, w)));
  return out;
}

template <CoefficientRing S>
GroupAlgebra<S> divide_one_minus_exp(const GroupAlgebra<S>& f, const Weight& alpha) {
  if (pairing(alpha, alpha) != Fraction(2))
    throw PreconditionError("divide_one_minus_exp: " + alpha.to_string() + " is not a root");
  // Group the support into lines base + s*alpha; on each line the division
  // is by (1 - z) in one variable z = e^alpha.
  std::map<Weight, std::map<std::int64_t, S>> lines;
  for (const auto& [w, c] : f.terms()) {
    const std::int64_t s = floor_div(pairing(w, alpha).num(), 2);
    lines[w - static_cast<int>(s) * alpha][s] = c;
  }
  GroupAlgebra<S> out(f.rank());
  for (const auto& [base, coeffs] : lines) {
    const std::int64_t lo = coeffs.begin()->first;
    const std::int64_t hi = coeffs.rbegin()->first;
    S running{};
    for (std::int64_t s = lo; s <= hi; ++s) {
      if (auto it = coeffs.find(s); it != coeffs.end()) running += it->second;
      if (s < hi) out.add_term(base + static_cast<int>(s) * alpha, running);
    }
    if (!running.is_zero())
      throw ArithmeticError("inexact division by (1 - e^" + alpha.to_string() + "): remainder " +
                            running.to_string() + " on the line through " + base.to_string());
  }
  return out;
}

template <CoefficientRing S>
GroupAlgebra<S> macdonald_operator(const GroupAlgebra<S>& f, int r, const MacdonaldContext& ctx) {
  const int n = ctx.n();
  const int k = ctx.k();
  check_r(r, n);
  if (f.rank() != n) throw RankError("macdonald_operator: rank mismatch");
  if (!is_w_invariant(f)) throw PreconditionError("macdonald_operator: input is not W-invariant");
  const auto& positive = ctx.roots().positive_roots;
  const S one(1);
  const S q2k = S::q_power(QExponent(2 * k));

  // Every summand is brought over D = prod_{beta > 0} (1 - e^beta), using
  // 1/(1 - e^{-beta}) = -e^beta / (1 - e^beta).
  GroupAlgebra<S> numerator(n);
  for (const auto& nu : lambda_r_weights(n, r)) {
    GroupAlgebra<S> term = shift_apply(f, nu);
    for (const auto& beta : positive) {
      const Fraction p = pairing(beta, nu);
      if (p == Fraction(-1)) {
        term = term * binomial(n, q2k, beta, one);
      } else if (p == Fraction(1)) {
        // alpha = -beta
        term = term * binomial(n, q2k, -beta, one);
        term = term * GroupAlgebra<S>::monomial(beta, -one);
      } else {
        term = term * binomial(n, one, beta, one);
      }
    }
    numerator += term;
  }
  for (const auto& beta : positive) numerator = divide_one_minus_exp(numerator, beta);
  return numerator.scaled(S::q_power(QExponent(static_cast<std::int64_t>(k) * r * (r - n))));
}

template GroupAlgebra<ExactScalar> shift_apply(const GroupAlgebra<ExactScalar>&, const Weight&);
template GroupAlgebra<LaurentPoly> shift_apply(const GroupAlgebra<LaurentPoly>&, const Weight&);
template GroupAlgebra<ExactScalar> divide_one_minus_exp(const GroupAlgebra<ExactScalar>&, const Weight&);
template GroupAlgebra<LaurentPoly> divide_one_minus_exp(const GroupAlgebra<LaurentPoly>&, const Weight&);
template GroupAlgebra<ExactScalar> macdonald_operator(const GroupAlgebra<ExactScalar>&, int,
                                                      const MacdonaldContext&);
template GroupAlgebra<LaurentPoly> macdonald_operator(const GroupAlgebra<LaurentPoly>&, int,
                                                      const MacdonaldContext&);

ExactScalar eigenvalue(const Weight& lam, int r, const MacdonaldContext& ctx) {
  check_dominant(lam, ctx, "eigenvalue");
  check_r(r, ctx.n());
  return evaluate_at(char_lambda_r<ExactScalar>(ctx.n(), r), lam + ctx.k() * ctx.roots().rho);
}

ExactScalar pieri_coefficient(const Weight& mu, const Weight& nu, const MacdonaldContext& ctx) {
  check_dominant(mu, ctx, "pieri_coefficient");
  if (nu.rank() != ctx.n() || exterior_degree(nu) == 0)
    throw PreconditionError("pieri_coefficient: " + nu.to_string() + " is not in any Lambda_r");
  if (!(mu + nu).is_dominant())
    throw PreconditionError("pieri_coefficient: " + (mu + nu).to_string() +
                            " is not dominant, the term drops out");
  const int k = ctx.k();
  const Weight shifted = mu + k * ctx.roots().rho;
  LaurentPoly num = 1, den = 1;
  for (const auto& alpha : ctx.roots().positive_roots) {
    if (pairing(alpha, nu) != Fraction(-1)) continue;
    const std::int64_t x = pairing(alpha, shifted).num();
    num *= qint(x + k - 1) * qint(x - k);
    den *= qint(x) * qint(x - 1);
  }
  return {num, den};
}

std::vector<PieriTerm> pieri_expand(const Weight& mu, int r, const MacdonaldContext& ctx) {
  check_dominant(mu, ctx, "pieri_expand");
  check_r(r, ctx.n());
  std::vector<PieriTerm> out;
  for (const auto& nu : lambda_r_weights(ctx.n(), r))
    if ((mu + nu).is_dominant()) out.push_back({nu, pieri_coefficient(mu, nu, ctx)});
  return out;
}

std::pair<ExactScalar, ExactScalar> specialized_recurrence_sides(const Weight& lam, const Weight& mu,
                                                                 int r, const MacdonaldContext& ctx) {
  check_dominant(lam, ctx, "specialized_recurrence");
  check_dominant(mu, ctx, "specialized_recurrence");
  check_r(r, ctx.n());
  const int k = ctx.k();
  const Weight krho = k * ctx.roots().rho;
  const Weight shifted = mu + krho;
  const auto all_roots = ctx.roots().roots();
  ExactScalar lhs;
  for (const auto& nu : lambda_r_weights(ctx.n(), r)) {
    if (!(mu + nu).is_dominant()) continue;
    LaurentPoly num = 1, den = 1;
    for (const auto& alpha : all_roots) {
      if (pairing(alpha, nu) != Fraction(-1)) continue;
      const std::int64_t x = pairing(shifted, alpha).num();
      num *= qint(x - k);
      den *= qint(x);
    }
    lhs += ExactScalar(num, den) * evaluate_poly(lam, mu + nu + krho, ctx);
  }
  ExactScalar rhs = evaluate_at(char_lambda_r<ExactScalar>(ctx.n(), r), lam + krho) *
                    evaluate_poly(lam, shifted, ctx);
  return {std::move(lhs), std::move(rhs)};
}

bool specialized_recurrence_check(const Weight& lam, const Weight& mu, int r,
                                  const MacdonaldContext& ctx) {
  auto [lhs, rhs] = specialized_recurrence_sides(lam, mu, r, ctx);
  return lhs == rhs;
}

}  // namespace macd
