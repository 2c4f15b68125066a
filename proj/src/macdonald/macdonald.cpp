#include "macd/macdonald.hpp"

#include <sstream>

namespace macd {

namespace {

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_dominant(const Weight& lam, const MacdonaldContext& ctx, const char* what) {
  if (lam.rank() != ctx.n())
    throw RankError(std::string(what) + ": weight " + lam.to_string() + " has wrong rank");
  if (!lam.is_dominant())
    throw PreconditionError(std::string(what) + ": " + lam.to_string() + " is not dominant");
}

using Matrix = std::vector<std::vector<LaurentPoly>>;

std::string describe(const Matrix& a) {
  std::ostringstream os;
  for (const auto& row : a) {
    os << "\n  [";
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? ", " : "") << row[j];
    os << "]";
  }
  return os.str();
}

// Solve the square system given as an augmented matrix [A | b].
std::vector<ExactScalar> bareiss_solve(Matrix a) {
  const std::size_t m = a.size();
  const Matrix original = a;
  LaurentPoly prev = 1;
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t p = k;
    while (p < m && a[p][k].is_zero()) ++p;
    if (p == m) throw SingularSystemError("singular Gram system:" + describe(original));
    std::swap(a[p], a[k]);
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j <= m; ++j)
        a[i][j] = divide_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = LaurentPoly();
    }
    prev = a[k][k];
  }
  std::vector<ExactScalar> x(m);
  for (std::size_t i = m; i-- > 0;) {
    ExactScalar rhs = a[i][m];
    for (std::size_t j = i + 1; j < m; ++j) rhs -= ExactScalar(a[i][j]) * x[j];
    x[i] = rhs / ExactScalar(a[i][i]);
  }
  return x;
}

std::shared_ptr<const MacdonaldPolynomial> build(const Weight& lam,
                                                 std::map<Weight, ExactScalar> coeffs) {
  auto p = std::make_shared<MacdonaldPolynomial>();
  p->lambda = lam;
  p->element = GroupAlgebraElement(lam.rank());
  for (const auto& [mu, c] : coeffs) p->element += orbit_sum<ExactScalar>(mu).scaled(c);
  p->coefficients = std::move(coeffs);
  p->cleared = clear_denominators(p->element);
  return p;
}

std::shared_ptr<const MacdonaldPolynomial> compute(const Weight& lam, const MacdonaldContext& ctx) {
  std::vector<Weight> lower = dominant_below(lam);
  lower.erase(lower.begin());  // lam itself comes first
  const std::size_t m = lower.size();
  std::map<Weight, ExactScalar> coeffs;
  coeffs.emplace(lam, ExactScalar(1));
  if (m > 0) {
    Matrix a(m, std::vector<LaurentPoly>(m + 1));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) a[i][j] = ctx.orbit_pairing(lower[j], lower[i]);
      a[i][m] = -ctx.orbit_pairing(lam, lower[i]);
    }
    std::vector<ExactScalar> c = bareiss_solve(std::move(a));
    for (std::size_t j = 0; j < m; ++j)
      if (!c[j].is_zero()) coeffs.emplace(lower[j], std::move(c[j]));
  }
  return build(lam, std::move(coeffs));
}

}  // namespace

MacdonaldContext::MacdonaldContext(int n, int k)
    : n_(n), k_(k), roots_(nullptr), kernel_(n), weyl_order_(factorial(n)) {
  if (n < 2) throw PreconditionError("MacdonaldContext: n must be >= 2");
  if (k < 1) throw PreconditionError("MacdonaldContext: k must be >= 1");
  roots_ = &root_data(n);
  kernel_ = delta_kernel<LaurentPoly>(n, k);
}

LaurentPoly MacdonaldContext::orbit_pairing(const Weight& mu, const Weight& nu) const {
  const auto key = std::make_pair(mu, nu);
  {
    std::lock_guard lock(gram_mutex_);
    if (auto it = gram_.find(key); it != gram_.end()) return it->second;
  }
  LaurentPoly value = inner_product(orbit_sum<LaurentPoly>(mu), orbit_sum<LaurentPoly>(nu), *this);
  std::lock_guard lock(gram_mutex_);
  return gram_.try_emplace(key, std::move(value)).first->second;
}

std::shared_ptr<const MacdonaldPolynomial> MacdonaldContext::find(const Weight& lam) const {
  std::shared_lock lock(poly_mutex_);
  auto it = polys_.find(lam);
  return it == polys_.end() ? nullptr : it->second;
}

std::shared_ptr<const MacdonaldPolynomial> MacdonaldContext::insert(
    std::shared_ptr<const MacdonaldPolynomial> p) const {
  std::unique_lock lock(poly_mutex_);
  return polys_.try_emplace(p->lambda, std::move(p)).first->second;
}

std::size_t MacdonaldContext::cache_size() const {
  std::shared_lock lock(poly_mutex_);
  return polys_.size();
}

nlohmann::json MacdonaldContext::cache_to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  std::shared_lock lock(poly_mutex_);
  for (const auto& [lam, p] : polys_) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& [mu, c] : p->coefficients)
      coeffs.push_back({{"mu", mu.to_string()}, {"value", c.to_string()}});
    entries.push_back({{"lambda", lam.to_string()}, {"coeffs", std::move(coeffs)}});
  }
  return {{"n", n_}, {"k", k_}, {"entries", std::move(entries)}};
}

std::size_t MacdonaldContext::load_cache(const nlohmann::json& doc) const {
  std::vector<std::shared_ptr<const MacdonaldPolynomial>> parsed;
  try {
    if (doc.at("n").get<int>() != n_ || doc.at("k").get<int>() != k_)
      throw CacheError("cache is for a different (n, k)");
    for (const auto& entry : doc.at("entries")) {
      const Weight lam = Weight::parse(entry.at("lambda").get<std::string>());
      if (lam.rank() != n_ || !lam.is_dominant())
        throw CacheError("cache entry " + lam.to_string() + " is not a dominant weight of rank n");
      std::map<Weight, ExactScalar> coeffs;
      for (const auto& c : entry.at("coeffs")) {
        const Weight mu = Weight::parse(c.at("mu").get<std::string>());
        if (mu.rank() != n_) throw CacheError("cache coefficient weight has wrong rank");
        ExactScalar v = ExactScalar::parse(c.at("value").get<std::string>());
        if (!coeffs.emplace(mu, std::move(v)).second)
          throw CacheError("duplicate coefficient " + mu.to_string());
      }
      if (!is_triangular(lam, coeffs))
        throw CacheError("cache entry " + lam.to_string() + " is not unitriangular");
      parsed.push_back(build(lam, std::move(coeffs)));
    }
  } catch (const nlohmann::json::exception& e) {
    throw CacheError(std::string("malformed cache document: ") + e.what());
  } catch (const ParseError& e) {
    throw CacheError(std::string("malformed cache value: ") + e.what());
  }
  for (auto& p : parsed) insert(std::move(p));
  return parsed.size();
}

bool is_triangular(const Weight& lam, const std::map<Weight, ExactScalar>& coeffs) {
  auto lead = coeffs.find(lam);
  if (lead == coeffs.end() || !(lead->second == ExactScalar(1))) return false;
  for (const auto& [mu, c] : coeffs) {
    if (c.is_zero()) return false;
    if (mu.rank() != lam.rank() || !mu.is_dominant() || !dominance_leq(mu, lam)) return false;
  }
  return true;
}

const MacdonaldPolynomial& macdonald_entry(const Weight& lam, const MacdonaldContext& ctx) {
  check_dominant(lam, ctx, "macdonald_poly");
  if (auto p = ctx.find(lam)) return *p;
  return *ctx.insert(compute(lam, ctx));
}

const GroupAlgebraElement& macdonald_poly(const Weight& lam, const MacdonaldContext& ctx) {
  return macdonald_entry(lam, ctx).element;
}

GroupAlgebraElement chi(const Weight& lam, const MacdonaldContext& ctx) {
  const auto& p = macdonald_entry(lam, ctx);
  return divide(p.cleared.numerator * chi0<LaurentPoly>(ctx.n(), ctx.k()), p.cleared.denominator);
}

ExactScalar norm(const Weight& lam, const MacdonaldContext& ctx) {
  const auto& p = macdonald_entry(lam, ctx);
  const LaurentPoly& d = p.cleared.denominator;
  return {inner_product(p.cleared.numerator, p.cleared.numerator, ctx), d * d};
}

ExactScalar evaluate_poly(const Weight& lam, const Weight& xi, const MacdonaldContext& ctx) {
  const auto& p = macdonald_entry(lam, ctx);
  return {evaluate_at(p.cleared.numerator, xi), p.cleared.denominator};
}

}  // namespace macd
