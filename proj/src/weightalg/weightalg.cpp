#include "macd/weightalg.hpp"

namespace macd {

ExactScalar qdim(const Weight& lam, int n) {
  if (lam.rank() != n) throw RankError("qdim: weight rank differs from n");
  if (!lam.is_dominant()) throw PreconditionError("qdim: " + lam.to_string() + " is not dominant");
  const RootData& rd = root_data(n);
  LaurentPoly num = 1, den = 1;
  for (const auto& a : rd.positive_roots) {
    num *= qint(pairing(a, lam + rd.rho).num());
    den *= qint(pairing(a, rd.rho).num());
  }
  return {num, den};
}

GroupAlgebraElement q_inverted(const GroupAlgebraElement& f) {
  return f.map_coefficients([](const ExactScalar& c) { return c.q_inverted(); });
}

GroupAlgebraElement to_exact(const PolyElement& f) {
  return f.map_coefficients([](const LaurentPoly& c) { return ExactScalar(c); });
}

ClearedElement clear_denominators(const GroupAlgebraElement& f) {
  LaurentPoly l = 1;
  for (const auto& [w, c] : f.terms()) {
    const LaurentPoly& d = c.denominator();
    if (d.is_constant()) continue;
    l = divide_exact(l * d, gcd(l, d));
  }
  PolyElement num(f.rank());
  for (const auto& [w, c] : f.terms())
    num.add_term(w, c.numerator() * divide_exact(l, c.denominator()));
  return {std::move(num), std::move(l)};
}

GroupAlgebraElement divide(const PolyElement& numerator, const LaurentPoly& denominator) {
  return numerator.map_coefficients(
      [&](const LaurentPoly& c) { return ExactScalar(c, denominator); });
}

}  // namespace macd
