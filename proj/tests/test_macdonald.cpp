#include <doctest.h>

#include <thread>

#include "macd/macdonald.hpp"
#include "support.hpp"

using namespace macd;

namespace {

ExactScalar q(std::int64_t e) { return ExactScalar::q_power(QExponent(e)); }

GroupAlgebraElement e(const Weight& w, ExactScalar c = 1) { return GroupAlgebraElement::monomial(w, std::move(c)); }

}  // namespace

TEST_CASE("delta kernel") {
  const Weight a({1, -1});
  const auto one = GroupAlgebraElement::constant(2, 1);
  CHECK(delta_kernel(2, 1) == one.scaled(2) - e(a) - e(-a));
  CHECK(constant_term(delta_kernel(2, 1)) == ExactScalar(2));
  CHECK(is_w_invariant(delta_kernel(3, 2)));
  CHECK_THROWS_AS(delta_kernel(2, 0), PreconditionError);
  CHECK(to_exact(delta_kernel<LaurentPoly>(3, 2)) == delta_kernel(3, 2));
}

TEST_CASE("chi_0") {
  CHECK(chi0(3, 1) == GroupAlgebraElement::constant(3, 1));
  CHECK(chi0(2, 2) == e(Weight({1, 0})) - e(Weight({-1, 0}), q(2)));
  CHECK_THROWS_AS(chi0(2, 0), PreconditionError);
}

TEST_CASE("inner product examples") {
  const MacdonaldContext c1(2, 1), c2(2, 2);
  const auto one = GroupAlgebraElement::constant(2, 1);
  CHECK(inner_product(one, one, c1) == ExactScalar(1));
  CHECK(inner_product(one, one, c2) == ExactScalar(LaurentPoly(1) + LaurentPoly::q_power(QExponent(2)) +
                                                   LaurentPoly::q_power(QExponent(4))));
  CHECK(inner_product(orbit_sum(Weight({1, 0})), one, c2).is_zero());
  CHECK_THROWS_AS(inner_product(one, GroupAlgebraElement::constant(3, 1), c1), RankError);
}

TEST_CASE("inner product agrees with the full product") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= 2; ++k) {
      const MacdonaldContext ctx(n, k);
      const auto ws = dominant_weights_up_to(n, 3);
      for (const auto& a : ws)
        for (const auto& b : ws) {
          const auto f = macdonald_poly(a, ctx) + orbit_sum(b).scaled(q(1));
          const auto g = orbit_sum(a) + orbit_sum(b).scaled(q(-3));
          CHECK(inner_product(f, g, ctx) == test::inner_product_by_product(f, g, ctx));
        }
    }
}

TEST_CASE("small polynomials") {
  const MacdonaldContext ctx(2, 1);
  CHECK(macdonald_poly(Weight::zero(2), ctx) == GroupAlgebraElement::constant(2, 1));
  CHECK(macdonald_poly(Weight({2, 0}), ctx) == orbit_sum(Weight({2, 0})) + orbit_sum(Weight::zero(2)));
  for (int k = 1; k <= 3; ++k) {
    const MacdonaldContext c(2, k);
    CHECK(macdonald_poly(Weight({1, 0}), c) == orbit_sum(Weight({1, 0})));
  }
  CHECK_THROWS_AS(macdonald_poly(Weight({0, 2}), ctx), PreconditionError);
  CHECK_THROWS_AS(macdonald_poly(Weight({1, 0, 0}), ctx), RankError);
  CHECK_THROWS_AS(MacdonaldContext(2, 0), PreconditionError);
  CHECK_THROWS_AS(MacdonaldContext(1, 1), PreconditionError);
}

TEST_CASE("frozen P_{2,1,0} at n=3, k=2") {
  // (1 - t)(2 + Q + t + 2Qt)/(1 - Q t^2) with Q = q^2, t = q^4
  const MacdonaldContext ctx(3, 2);
  const auto& entry = macdonald_entry(Weight({2, 1, 0}), ctx);
  CHECK(entry.coefficients.size() == 2);
  CHECK(entry.coefficients.at(Weight::zero(3)).to_string() ==
        "(2*q^(8)+3*q^(6)+2*q^(4)+3*q^(2)+2)/(1*q^(8)+1*q^(6)+1*q^(4)+1*q^(2)+1)");
}

TEST_CASE("k = 1 gives Weyl characters") {
  for (int n = 2; n <= 4; ++n) {
    const MacdonaldContext ctx(n, 1);
    for (const auto& lam : dominant_weights_up_to(n, 4)) {
      const auto& entry = macdonald_entry(lam, ctx);
      const auto kostka = test::schur_orbit_expansion(lam);
      std::map<Weight, ExactScalar> expected;
      for (const auto& [mu, kc] : kostka) expected[mu] = ExactScalar(kc);
      CHECK_MESSAGE(entry.coefficients == expected, lam.to_string());
    }
  }
}

TEST_CASE("n = 2 matches the two-variable closed formula") {
  for (int k = 1; k <= 4; ++k) {
    const MacdonaldContext ctx(2, k);
    for (int m = 0; m <= 6; ++m)
      CHECK_MESSAGE(macdonald_poly(Weight({m, 0}), ctx) == test::two_variable_macdonald(m, k),
                    "k=" << k << " m=" << m);
  }
}

TEST_CASE("orthogonality, triangularity and invariance") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k) {
      const MacdonaldContext ctx(n, k);
      const auto ws = dominant_weights_up_to(n, 4);
      for (const auto& lam : ws) {
        const auto& entry = macdonald_entry(lam, ctx);
        CHECK(is_triangular(lam, entry.coefficients));
        CHECK(entry.coefficients.at(lam) == ExactScalar(1));
        CHECK(is_w_invariant(entry.element));
        for (const auto& mu : ws)
          if (mu != lam) CHECK(inner_product(entry.element, macdonald_poly(mu, ctx), ctx).is_zero());
      }
    }
}

TEST_CASE("norms by constant term") {
  const MacdonaldContext c2(2, 2);
  CHECK(norm(Weight::zero(2), c2).to_string() == "1*q^(4)+1*q^(2)+1");
  for (int n = 2; n <= 3; ++n) {
    const MacdonaldContext ctx(n, 1);
    for (const auto& lam : dominant_weights_up_to(n, 4)) CHECK(norm(lam, ctx) == ExactScalar(1));
  }
}

TEST_CASE("chi_lambda") {
  const MacdonaldContext ctx(3, 2);
  CHECK(chi(Weight::zero(3), ctx) == chi0(3, 2));
  const Weight lam({2, 1, 0});
  CHECK(chi(lam, ctx) == macdonald_poly(lam, ctx) * chi0(3, 2));
  const MacdonaldContext c1(3, 1);
  CHECK(chi(lam, c1) == macdonald_poly(lam, c1));
}

TEST_CASE("triangularity checker") {
  std::map<Weight, ExactScalar> c;
  c[Weight({2, 0})] = 1;
  c[Weight::zero(2)] = 5;
  CHECK(is_triangular(Weight({2, 0}), c));
  c[Weight({2, 0})] = 2;
  CHECK_FALSE(is_triangular(Weight({2, 0}), c));
  c[Weight({2, 0})] = 1;
  c[Weight({4, 0})] = 1;
  CHECK_FALSE(is_triangular(Weight({2, 0}), c));
}

TEST_CASE("cache survives a JSON round trip") {
  const MacdonaldContext a(3, 2);
  for (const auto& lam : dominant_weights_up_to(3, 3)) macdonald_entry(lam, a);
  const auto doc = a.cache_to_json();
  const MacdonaldContext b(3, 2);
  CHECK(b.load_cache(doc) == a.cache_size());
  for (const auto& lam : dominant_weights_up_to(3, 3))
    CHECK(b.find(lam)->coefficients == a.find(lam)->coefficients);
  CHECK(b.cache_to_json() == doc);
  CHECK(b.cache_to_json().dump() == doc.dump());
}

TEST_CASE("invalid cache documents are rejected whole") {
  const MacdonaldContext a(2, 2);
  macdonald_entry(Weight({2, 0}), a);
  macdonald_entry(Weight({3, 0}), a);
  auto doc = a.cache_to_json();

  SUBCASE("wrong parameters") {
    doc["k"] = 3;
    const MacdonaldContext b(2, 2);
    CHECK_THROWS_AS(b.load_cache(doc), CacheError);
    CHECK(b.cache_size() == 0);
  }
  SUBCASE("leading coefficient not one") {
    for (auto& c : doc["entries"][1]["coeffs"])
      if (c["mu"] == doc["entries"][1]["lambda"]) c["value"] = "2";
    const MacdonaldContext b(2, 2);
    CHECK_THROWS_AS(b.load_cache(doc), CacheError);
    CHECK(b.cache_size() == 0);
  }
  SUBCASE("garbage scalar") {
    doc["entries"][0]["coeffs"][0]["value"] = "q^(";
    const MacdonaldContext b(2, 2);
    CHECK_THROWS_AS(b.load_cache(doc), CacheError);
  }
  SUBCASE("not an object") {
    const MacdonaldContext b(2, 2);
    CHECK_THROWS_AS(b.load_cache(nlohmann::json::array()), CacheError);
  }
}

TEST_CASE("concurrent computation yields one cached entry") {
  const MacdonaldContext ctx(3, 2);
  const Weight lam({3, 1, 0});
  std::vector<const MacdonaldPolynomial*> seen(4);
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < seen.size(); ++i)
    pool.emplace_back([&, i] { seen[i] = &macdonald_entry(lam, ctx); });
  for (auto& t : pool) t.join();
  for (const auto* p : seen) CHECK(p == seen.front());
  const MacdonaldContext fresh(3, 2);
  CHECK(fresh.find(lam) == nullptr);
  CHECK(macdonald_entry(lam, fresh).coefficients == seen.front()->coefficients);
}
