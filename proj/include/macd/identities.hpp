#pragma once

// Closed forms for the inner-product, symmetry and special-value identities,
// and verification drivers that compare them with first-principles values.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "macd/exactalg.hpp"
#include "macd/macdonald.hpp"
#include "macd/roota.hpp"

namespace macd {

enum class Identity {
  norm,
  symmetry,
  special_value,
  kernel_factorization,
  eigenvalue,
  pieri,
  specialized_recurrence,
  cross_check_45,
};

std::string_view identity_name(Identity id);
std::optional<Identity> parse_identity(std::string_view name);
const std::vector<Identity>& all_identities();

struct VerifyParams {
  int n = 2;
  int k = 1;
  std::optional<Weight> lambda;
  std::optional<Weight> mu;
  std::optional<int> r;
};

struct VerificationReport {
  Identity identity = Identity::norm;
  VerifyParams params;
  std::string lhs;
  std::string rhs;
  bool equal = false;
  /// Set when the parameters were rejected (`error` says why).
  bool invalid = false;
  /// Set when the identity does not apply (a vanishing denominator).
  bool skipped = false;
  std::string error;

  nlohmann::json to_json() const;
};

/// prod_{alpha>0} prod_{i=1}^{k-1} (1 - q^{2(alpha,lam+k rho)+2i}) / (1 - q^{2(alpha,lam+k rho)-2i})
ExactScalar norm_rhs(const Weight& lam, const MacdonaldContext& ctx);

/// d_k(lam) = prod_{alpha>0} prod_{i=1}^{k} (1 - q^{2(alpha,lam+rho)-2i}); k may be 0.
ExactScalar shapovalov_denominator(const Weight& lam, int k, int n);

/// prod_{alpha>0} prod_{i=1}^{k} (1 - q^{2(alpha,lam+rho)+2i}) / (1 - q^{2(alpha,lam+rho)-2i})
ExactScalar cor38_ratio(const Weight& lam, int k, int n);

/// prod_{alpha>0} prod_{i=0}^{k-1} [(alpha,mu+k rho)+i] / [(alpha,lam+k rho)+i]
ExactScalar symmetry_rhs(const Weight& lam, const Weight& mu, const MacdonaldContext& ctx);

/// The same ratio written with (1 - q^...) factors and the q^{2k(rho,lam-mu)} prefactor.
ExactScalar symmetry_rhs_product_form(const Weight& lam, const Weight& mu, const MacdonaldContext& ctx);

/// prod_{alpha>0} prod_{i=0}^{k-1} [(alpha,lam+k rho)+i] / [(alpha,k rho)+i]
ExactScalar special_value_rhs(const Weight& lam, const MacdonaldContext& ctx);

/// Both sides of the character form of the symmetry identity,
///   chi_mu(q^{2(lam+k rho)}) <P_lam,P_lam> dim_q L_{lam^k}
///     = chi_lam(q^{2(mu+k rho)}) <P_mu,P_mu> dim_q L_{mu^k},
/// with lam^k = lam + (k-1) rho.
std::pair<ExactScalar, ExactScalar> character_symmetry_sides(const Weight& lam, const Weight& mu,
                                                             const MacdonaldContext& ctx);

/// Same, with each q-dimension attached to the other weight's side.
std::pair<ExactScalar, ExactScalar> character_symmetry_sides_swapped_dims(
    const Weight& lam, const Weight& mu, const MacdonaldContext& ctx);

/// Never throws for bad parameters; they come back as a report with `error`.
VerificationReport verify(Identity identity, const VerifyParams& params, const MacdonaldContext& ctx);

struct GridOptions {
  int n = 2;
  int k = 1;
  int max_size = 4;
  std::vector<Identity> identities;  // empty: all
  unsigned threads = 1;
};

struct GridSummary {
  std::vector<VerificationReport> reports;  // deterministic order
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;

  nlohmann::json to_json() const;
};

/// Every parameter tuple of the selected identities over dominant weights
/// with |lambda|, |mu| <= max_size and every r.
std::vector<VerifyParams> grid_parameters(Identity identity, int n, int k, int max_size);

GridSummary run_grid(const GridOptions& options, const MacdonaldContext& ctx);

}  // namespace macd
