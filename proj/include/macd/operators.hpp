#pragma once

// Macdonald-Ruijsenaars operators and the recurrences they imply.
//
//   M_r = q^{kr(r-n)} sum_{nu in Lambda_r}
//           prod_{alpha in R : (alpha,nu) = -1} (q^{2k} - e^alpha)/(1 - e^alpha)  T_nu
//   T_nu e^lam = q^{2(nu,lam)} e^lam

#include <utility>
#include <vector>

#include "macd/exactalg.hpp"
#include "macd/macdonald.hpp"
#include "macd/roota.hpp"
#include "macd/weightalg.hpp"

namespace macd {

struct PieriTerm {
  Weight nu;
  ExactScalar coefficient;
};

/// T_nu f.
template <CoefficientRing S>
GroupAlgebra<S> shift_apply(const GroupAlgebra<S>& f, const Weight& nu);

/// f / (1 - e^alpha) for a root alpha; throws ArithmeticError when the
/// division leaves a remainder.
template <CoefficientRing S>
GroupAlgebra<S> divide_one_minus_exp(const GroupAlgebra<S>& f, const Weight& alpha);

/// M_r f for W-invariant f.
template <CoefficientRing S>
GroupAlgebra<S> macdonald_operator(const GroupAlgebra<S>& f, int r, const MacdonaldContext& ctx);

/// c_lam^r = X_r(q^{2(lam + k rho)}).
ExactScalar eigenvalue(const Weight& lam, int r, const MacdonaldContext& ctx);

/// Coefficient of P_{mu+nu} in X_r P_mu.
ExactScalar pieri_coefficient(const Weight& mu, const Weight& nu, const MacdonaldContext& ctx);

/// All admissible terms of X_r P_mu = sum coeff(nu) P_{mu+nu}, in Lambda_r order.
std::vector<PieriTerm> pieri_expand(const Weight& mu, int r, const MacdonaldContext& ctx);

/// Both sides of the recurrence obtained by evaluating M_r P_lam = c P_lam
/// at q^{2(mu + k rho)}.
std::pair<ExactScalar, ExactScalar> specialized_recurrence_sides(const Weight& lam, const Weight& mu,
                                                                 int r, const MacdonaldContext& ctx);
bool specialized_recurrence_check(const Weight& lam, const Weight& mu, int r,
                                  const MacdonaldContext& ctx);

/// r such that nu is a weight of the r-th exterior power, or 0.
int exterior_degree(const Weight& nu);

}  // namespace macd
