#include "macd/identities.hpp"

#include <atomic>
#include <thread>

#include "macd/operators.hpp"

namespace macd {

namespace {

// 1 - q^e
LaurentPoly one_minus_q(std::int64_t e) { return LaurentPoly(1) - LaurentPoly::q_power(QExponent(e)); }

std::int64_t int_pairing(const Weight& a, const Weight& b) {
  const Fraction p = pairing(a, b);
  if (!p.is_integer()) throw PreconditionError("pairing is not integral");
  return p.num();
}

struct InvalidParams : PreconditionError {
  using PreconditionError::PreconditionError;
};

const Weight& need_weight(const std::optional<Weight>& w, const char* name, const MacdonaldContext& ctx) {
  if (!w) throw InvalidParams(std::string("missing parameter ") + name);
  if (w->rank() != ctx.n()) throw InvalidParams(std::string(name) + " has rank different from n");
  if (!w->is_dominant()) throw InvalidParams(std::string(name) + " = " + w->to_string() + " is not dominant");
  return *w;
}

int need_r(const std::optional<int>& r, const MacdonaldContext& ctx) {
  if (!r) throw InvalidParams("missing parameter r");
  if (*r < 1 || *r > ctx.n() - 1) throw InvalidParams("r out of range 1..n-1");
  return *r;
}

void fill(VerificationReport& rep, const std::string& lhs, const std::string& rhs, bool equal) {
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.equal = equal;
}

void fill(VerificationReport& rep, const ExactScalar& lhs, const ExactScalar& rhs) {
  fill(rep, lhs.to_string(), rhs.to_string(), lhs == rhs);
}

void fill(VerificationReport& rep, const GroupAlgebraElement& lhs, const GroupAlgebraElement& rhs) {
  fill(rep, lhs.to_string(), rhs.to_string(), lhs == rhs);
}

void run_identity(VerificationReport& rep, const MacdonaldContext& ctx) {
  const VerifyParams& p = rep.params;
  const int k = ctx.k();
  const Weight& rho = ctx.roots().rho;
  switch (rep.identity) {
    case Identity::norm: {
      const Weight& lam = need_weight(p.lambda, "lambda", ctx);
      fill(rep, norm(lam, ctx), norm_rhs(lam, ctx));
      return;
    }
    case Identity::special_value: {
      const Weight& lam = need_weight(p.lambda, "lambda", ctx);
      fill(rep, evaluate_poly(lam, k * rho, ctx), special_value_rhs(lam, ctx));
      return;
    }
    case Identity::symmetry: {
      const Weight& lam = need_weight(p.lambda, "lambda", ctx);
      const Weight& mu = need_weight(p.mu, "mu", ctx);
      const ExactScalar denom = evaluate_poly(lam, mu + k * rho, ctx);
      if (denom.is_zero()) {
        rep.skipped = true;
        rep.error = "P_lambda vanishes at q^{2(mu + k rho)}";
        return;
      }
      fill(rep, evaluate_poly(mu, lam + k * rho, ctx) / denom, symmetry_rhs(lam, mu, ctx));
      return;
    }
    case Identity::kernel_factorization: {
      const int n = ctx.n();
      const PolyElement c0 = chi0<LaurentPoly>(n, k);
      const PolyElement lhs = c0 * bar(c0) * delta_kernel<LaurentPoly>(n, 1);
      fill(rep, lhs.to_string(), ctx.kernel().to_string(), lhs == ctx.kernel());
      return;
    }
    case Identity::eigenvalue: {
      const Weight& lam = need_weight(p.lambda, "lambda", ctx);
      const int r = need_r(p.r, ctx);
      const auto& entry = macdonald_entry(lam, ctx);
      const PolyElement& num = entry.cleared.numerator;
      const LaurentPoly& den = entry.cleared.denominator;
      const LaurentPoly c = evaluate_at(char_lambda_r<LaurentPoly>(ctx.n(), r), lam + k * rho);
      const PolyElement lhs = macdonald_operator(num, r, ctx);
      const PolyElement rhs = num.scaled(c);
      fill(rep, divide(lhs, den).to_string(), divide(rhs, den).to_string(), lhs == rhs);
      return;
    }
    case Identity::pieri: {
      const Weight& mu = need_weight(p.mu, "mu", ctx);
      const int r = need_r(p.r, ctx);
      GroupAlgebraElement lhs(ctx.n());
      for (const auto& term : pieri_expand(mu, r, ctx))
        lhs += macdonald_poly(mu + term.nu, ctx).scaled(term.coefficient);
      const auto& entry = macdonald_entry(mu, ctx);
      const GroupAlgebraElement rhs =
          divide(char_lambda_r<LaurentPoly>(ctx.n(), r) * entry.cleared.numerator,
                 entry.cleared.denominator);
      fill(rep, lhs, rhs);
      return;
    }
    case Identity::specialized_recurrence: {
      const Weight& lam = need_weight(p.lambda, "lambda", ctx);
      const Weight& mu = need_weight(p.mu, "mu", ctx);
      const int r = need_r(p.r, ctx);
      auto [lhs, rhs] = specialized_recurrence_sides(lam, mu, r, ctx);
      fill(rep, lhs, rhs);
      return;
    }
    case Identity::cross_check_45: {
      const Weight& lam = need_weight(p.lambda, "lambda", ctx);
      const Weight& mu = need_weight(p.mu, "mu", ctx);
      auto [lhs, rhs] = character_symmetry_sides(lam, mu, ctx);
      fill(rep, lhs, rhs);
      return;
    }
  }
}

}  // namespace

std::string_view identity_name(Identity id) {
  switch (id) {
    case Identity::norm: return "norm";
    case Identity::symmetry: return "symmetry";
    case Identity::special_value: return "special_value";
    case Identity::kernel_factorization: return "kernel_factorization";
    case Identity::eigenvalue: return "eigenvalue";
    case Identity::pieri: return "pieri";
    case Identity::specialized_recurrence: return "specialized_recurrence";
    case Identity::cross_check_45: return "cross_check_45";
  }
  return "unknown";
}

const std::vector<Identity>& all_identities() {
  static const std::vector<Identity> ids = {
      Identity::norm,     Identity::symmetry,     Identity::special_value,
      Identity::kernel_factorization, Identity::eigenvalue, Identity::pieri,
      Identity::specialized_recurrence, Identity::cross_check_45};
  return ids;
}

std::optional<Identity> parse_identity(std::string_view name) {
  for (Identity id : all_identities())
    if (identity_name(id) == name) return id;
  return std::nullopt;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json params_json = {{"n", params.n}, {"k", params.k}};
  if (params.lambda) params_json["lambda"] = params.lambda->to_string();
  if (params.mu) params_json["mu"] = params.mu->to_string();
  if (params.r) params_json["r"] = *params.r;
  nlohmann::json j = {{"identity", identity_name(identity)},
                      {"params", std::move(params_json)},
                      {"lhs", lhs},
                      {"rhs", rhs},
                      {"equal", equal}};
  if (!error.empty()) j["error"] = error;
  if (skipped) j["skipped"] = true;
  return j;
}

ExactScalar norm_rhs(const Weight& lam, const MacdonaldContext& ctx) {
  const int k = ctx.k();
  const Weight shifted = lam + k * ctx.roots().rho;
  LaurentPoly num = 1, den = 1;
  for (const auto& alpha : ctx.roots().positive_roots) {
    const std::int64_t x = int_pairing(alpha, shifted);
    for (int i = 1; i <= k - 1; ++i) {
      num *= one_minus_q(2 * x + 2 * i);
      den *= one_minus_q(2 * x - 2 * i);
    }
  }
  return {num, den};
}

ExactScalar shapovalov_denominator(const Weight& lam, int k, int n) {
  if (k < 0) throw PreconditionError("shapovalov_denominator: k must be >= 0");
  const RootData& rd = root_data(n);
  const Weight shifted = lam + rd.rho;
  LaurentPoly d = 1;
  for (const auto& alpha : rd.positive_roots) {
    const std::int64_t x = int_pairing(alpha, shifted);
    for (int i = 1; i <= k; ++i) d *= one_minus_q(2 * x - 2 * i);
  }
  return d;
}

ExactScalar cor38_ratio(const Weight& lam, int k, int n) {
  if (k < 0) throw PreconditionError("cor38_ratio: k must be >= 0");
  const RootData& rd = root_data(n);
  const Weight shifted = lam + rd.rho;
  LaurentPoly num = 1, den = 1;
  for (const auto& alpha : rd.positive_roots) {
    const std::int64_t x = int_pairing(alpha, shifted);
    for (int i = 1; i <= k; ++i) {
      if (x == i)
        throw ArithmeticError("cor38_ratio: denominator factor vanishes at alpha=" + alpha.to_string() +
                              ", i=" + std::to_string(i));
      num *= one_minus_q(2 * x + 2 * i);
      den *= one_minus_q(2 * x - 2 * i);
    }
  }
  return {num, den};
}

namespace {

// prod_{alpha>0} prod_{i=0}^{k-1} [(alpha, w + k rho) + i]
LaurentPoly bracket_product(const Weight& w, const MacdonaldContext& ctx) {
  const int k = ctx.k();
  const Weight shifted = w + k * ctx.roots().rho;
  LaurentPoly p = 1;
  for (const auto& alpha : ctx.roots().positive_roots) {
    const std::int64_t x = int_pairing(alpha, shifted);
    for (int i = 0; i < k; ++i) p *= qint(x + i);
  }
  return p;
}

}  // namespace

ExactScalar symmetry_rhs(const Weight& lam, const Weight& mu, const MacdonaldContext& ctx) {
  LaurentPoly den = bracket_product(lam, ctx);
  if (den.is_zero()) throw ArithmeticError("symmetry_rhs: vanishing q-integer in the denominator");
  return {bracket_product(mu, ctx), std::move(den)};
}

ExactScalar symmetry_rhs_product_form(const Weight& lam, const Weight& mu, const MacdonaldContext& ctx) {
  const int k = ctx.k();
  const Weight& rho = ctx.roots().rho;
  LaurentPoly num = LaurentPoly::q_power(Fraction(2 * k) * pairing(rho, lam - mu));
  LaurentPoly den = 1;
  for (const auto& alpha : ctx.roots().positive_roots) {
    const std::int64_t xm = int_pairing(alpha, mu + k * rho);
    const std::int64_t xl = int_pairing(alpha, lam + k * rho);
    for (int i = 0; i < k; ++i) {
      num *= one_minus_q(2 * xm + 2 * i);
      den *= one_minus_q(2 * xl + 2 * i);
    }
  }
  return {num, den};
}

ExactScalar special_value_rhs(const Weight& lam, const MacdonaldContext& ctx) {
  return {bracket_product(lam, ctx), bracket_product(Weight::zero(ctx.n()), ctx)};
}

namespace {

struct CharacterSymmetryTerms {
  ExactScalar chi_mu_at_lam, chi_lam_at_mu, norm_lam, norm_mu, dim_lam, dim_mu;
};

CharacterSymmetryTerms character_symmetry_terms(const Weight& lam, const Weight& mu,
                                                const MacdonaldContext& ctx) {
  const int k = ctx.k();
  const Weight& rho = ctx.roots().rho;
  const Weight lam_k = lam + (k - 1) * rho;
  const Weight mu_k = mu + (k - 1) * rho;
  return {evaluate_at(chi(mu, ctx), lam + k * rho),
          evaluate_at(chi(lam, ctx), mu + k * rho),
          norm(lam, ctx),
          norm(mu, ctx),
          qdim(lam_k, ctx.n()),
          qdim(mu_k, ctx.n())};
}

}  // namespace

std::pair<ExactScalar, ExactScalar> character_symmetry_sides(const Weight& lam, const Weight& mu,
                                                             const MacdonaldContext& ctx) {
  const auto t = character_symmetry_terms(lam, mu, ctx);
  return {t.chi_mu_at_lam * t.norm_lam * t.dim_lam, t.chi_lam_at_mu * t.norm_mu * t.dim_mu};
}

std::pair<ExactScalar, ExactScalar> character_symmetry_sides_swapped_dims(
    const Weight& lam, const Weight& mu, const MacdonaldContext& ctx) {
  const auto t = character_symmetry_terms(lam, mu, ctx);
  return {t.chi_mu_at_lam * t.norm_lam * t.dim_mu, t.chi_lam_at_mu * t.norm_mu * t.dim_lam};
}

VerificationReport verify(Identity identity, const VerifyParams& params, const MacdonaldContext& ctx) {
  VerificationReport rep;
  rep.identity = identity;
  rep.params = params;
  try {
    if (params.n != ctx.n() || params.k != ctx.k())
      throw InvalidParams("parameters do not match the context (n, k)");
    run_identity(rep, ctx);
  } catch (const InvalidParams& e) {
    rep.invalid = true;
    rep.error = e.what();
  } catch (const PreconditionError& e) {
    rep.invalid = true;
    rep.error = e.what();
  } catch (const std::exception& e) {
    rep.equal = false;
    rep.error = e.what();
  }
  return rep;
}

std::vector<VerifyParams> grid_parameters(Identity identity, int n, int k, int max_size) {
  const auto weights = dominant_weights_up_to(n, max_size);
  std::vector<VerifyParams> out;
  auto base = [&] {
    VerifyParams p;
    p.n = n;
    p.k = k;
    return p;
  };
  switch (identity) {
    case Identity::kernel_factorization:
      out.push_back(base());
      break;
    case Identity::norm:
    case Identity::special_value:
      for (const auto& lam : weights) {
        auto p = base();
        p.lambda = lam;
        out.push_back(p);
      }
      break;
    case Identity::symmetry:
    case Identity::cross_check_45:
      for (const auto& lam : weights)
        for (const auto& mu : weights) {
          auto p = base();
          p.lambda = lam;
          p.mu = mu;
          out.push_back(p);
        }
      break;
    case Identity::eigenvalue:
      for (const auto& lam : weights)
        for (int r = 1; r < n; ++r) {
          auto p = base();
          p.lambda = lam;
          p.r = r;
          out.push_back(p);
        }
      break;
    case Identity::pieri:
      for (const auto& mu : weights)
        for (int r = 1; r < n; ++r) {
          auto p = base();
          p.mu = mu;
          p.r = r;
          out.push_back(p);
        }
      break;
    case Identity::specialized_recurrence:
      for (const auto& lam : weights)
        for (const auto& mu : weights)
          for (int r = 1; r < n; ++r) {
            auto p = base();
            p.lambda = lam;
            p.mu = mu;
            p.r = r;
            out.push_back(p);
          }
      break;
  }
  return out;
}

nlohmann::json GridSummary::to_json() const {
  nlohmann::json by_identity = nlohmann::json::object();
  for (const auto& rep : reports) {
    auto& slot = by_identity[std::string(identity_name(rep.identity))];
    if (slot.is_null()) slot = {{"passed", 0}, {"failed", 0}, {"skipped", 0}};
    const char* key = rep.skipped ? "skipped" : rep.equal ? "passed" : "failed";
    slot[key] = slot[key].get<int>() + 1;
  }
  return {{"passed", passed}, {"failed", failed}, {"skipped", skipped}, {"identities", by_identity}};
}

GridSummary run_grid(const GridOptions& options, const MacdonaldContext& ctx) {
  const auto& ids = options.identities.empty() ? all_identities() : options.identities;
  std::vector<std::pair<Identity, VerifyParams>> tasks;
  for (Identity id : ids)
    for (auto& p : grid_parameters(id, options.n, options.k, options.max_size)) tasks.emplace_back(id, p);

  GridSummary summary;
  summary.reports.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++)
      summary.reports[i] = verify(tasks[i].first, tasks[i].second, ctx);
  };
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& rep : summary.reports) {
    if (rep.skipped)
      ++summary.skipped;
    else if (rep.equal)
      ++summary.passed;
    else
      ++summary.failed;
  }
  return summary;
}

}  // namespace macd
