#include "doctest.h"
#include "shuffle/bialgebra.hpp"
#include "shuffle/errors.hpp"
#include "shuffle/generators.hpp"
#include "shuffle/hall_geometry.hpp"

using namespace shuffle;

namespace {

ShuffleElement zpow(int d) { return ShuffleElement::from_parts(1, LaurentPoly::z(0, 1, d)); }

WordExpression w(std::vector<int> v, const ParamScalar& c = 1) { return WordExpression::word(std::move(v), c); }

// Power series of N(x) / D(x) up to x^order, D(0) invertible.
std::vector<ParamScalar> series_div(std::vector<ParamScalar> num, const std::vector<ParamScalar>& den, int order) {
  num.resize(order + 1);
  std::vector<ParamScalar> out(order + 1);
  for (int j = 0; j <= order; ++j) {
    ParamScalar c = num[j];
    for (int i = 1; i <= j && i < static_cast<int>(den.size()); ++i) c -= den[i] * out[j - i];
    out[j] = c / den[0];
  }
  return out;
}

std::vector<ParamScalar> poly_mul(const std::vector<ParamScalar>& a, const std::vector<ParamScalar>& b) {
  std::vector<ParamScalar> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Two-letter pairings straight from the symmetrized integrand: the identity
// permutation contributes delta_{n,m}; the swap contributes the coefficient
// of x^{m2 - n1} in omega(x) / omega(1/x), x = u1/u2 small.
ParamScalar two_letter_pairing(int n1, int n2, int m1, int m2) {
  ParamScalar q1 = q1_pow(1), q2 = q2_pow(1), q = q_pow(1);
  // omega(x)/omega(1/x) = -(x - q)(1 - q1 x)(1 - q2 x) / ((x - q1)(x - q2)(1 - q x))
  auto num = poly_mul(poly_mul({-q, 1}, {1, -q1}), {1, -q2});
  for (auto& c : num) c = -c;
  auto den = poly_mul(poly_mul({-q1, 1}, {-q2, 1}), {1, -q});
  ParamScalar v = (n1 == m1 && n2 == m2) ? ParamScalar(1) : ParamScalar(0);
  const int j = m2 - n1;
  if (n1 + n2 == m1 + m2 && j >= 0) v += series_div(num, den, j)[j];
  return v / alpha(1).pow(2);
}

Collection coll(std::vector<std::pair<int, int>> parts) {
  Collection c;
  c.parts = std::move(parts);
  return c;
}

}  // namespace

TEST_CASE("Omega series") {
  auto a = omega_big_series(5), b = omega_rational_series(5);
  CHECK(a == b);
  CHECK(a[0] == ParamScalar(1));
  CHECK(a[1] == -alpha(1));
}

TEST_CASE("h monomials") {
  HMonomial a = {1, 2}, b = {-1, 0, 1};
  CHECK(h_mul(a, b) == HMonomial{0, 2, 1});
  CHECK(h_degree(h_mul(a, b)) == 4);
  CHECK(h_is_h0_power({-3}));
  CHECK_FALSE(h_is_h0_power({0, 1}));
  CHECK(h_mul({}, {}).empty());
}

TEST_CASE("single-letter pairing") {
  for (int d = -3; d <= 3; ++d) {
    CAPTURE(d);
    CHECK(pair_word_element(w({d}), zpow(d)) == alpha(1).inverse());
    CHECK(pair_word_element(w({d}), zpow(d + 1)).is_zero());
  }
}

TEST_CASE("two-letter pairings match the symmetrized integrand") {
  for (int n1 = -1; n1 <= 1; ++n1)
    for (int n2 = -1; n2 <= 1; ++n2)
      for (int m1 = -1; m1 <= 1; ++m1) {
        int m2 = n1 + n2 - m1;
        CAPTURE(n1);
        CAPTURE(n2);
        CAPTURE(m1);
        ShuffleElement e = word_to_element(w({m1, m2}));
        CHECK(pair_word_element(w({n1, n2}), e) == two_letter_pairing(n1, n2, m1, m2));
      }
}

TEST_CASE("serial and parallel pairing kernels agree") {
  ShuffleElement p21 = build_P(2, 1), p30 = build_P(3, 0);
  for (auto word : std::vector<std::vector<int>>{{1, 0}, {0, 1}, {2, -1}, {-1, 2}}) {
    CHECK(pair_word_element(w(word), p21) == pair_word_element_serial(w(word), p21));
  }
  for (auto word : std::vector<std::vector<int>>{{0, 0, 0}, {1, 0, -1}, {-1, 1, 0}})
    CHECK(pair_word_element(w(word), p30) == pair_word_element_serial(w(word), p30));
}

TEST_CASE("pairing of P(2,1) with itself") {
  // quadratic in P(2,1), so the sign is independent of its normalization
  CHECK(pair_word_element(build_P_recursive(2, 1).word, build_P(2, 1)) == -alpha(1).inverse());
}

TEST_CASE("Gram matrices") {
  CHECK(hopf_ortho_value(coll({{1, 0}, {1, 0}})) == ParamScalar(2) / alpha(1).pow(2));
  CHECK(hopf_ortho_value(coll({{2, 0}})) == -alpha(2).inverse());
  CHECK(ortho_value(coll({{2, 0}, {1, 1}})) == (alpha(2) * alpha(1)).inverse());
  for (auto [k, d] : {std::pair{2, 0}, std::pair{2, 1}, std::pair{3, 0}, std::pair{3, 1}}) {
    CAPTURE(k);
    CAPTURE(d);
    auto cs = enumerate_collections(k, d, Rational(d, k) + Rational(1));
    CHECK(gram_check(cs, GramConvention::kHopf).ok());
  }
  // increasing slope order is not orthogonal for this pairing
  CHECK_FALSE(gram_check(enumerate_collections(2, 0, Rational(1)), GramConvention::kStated).ok());
}

TEST_CASE("pairing suite") {
  Report r = pairing_suite();
  // the single stated line that disagrees: (P(2,1), P(2,1)) = 1/alpha_1
  CHECK(r.failures() == 1);
  for (const auto& l : r.lines)
    if (!l.pass) CHECK(l.id == "pair P(2,1) P(2,1)");
}

TEST_CASE("coproduct of a single variable") {
  const int W = 4;
  for (int d : {-1, 0, 2}) {
    HSeriesElement x = delta_truncated(zpow(d), W);
    CHECK(x.terms().size() == static_cast<std::size_t>(W + 2));
    for (const auto& [key, pay] : x.terms()) {
      if (key.ks[0] == 1) {
        CHECK(key.ds[0] == d);
        CHECK(key.h[0].empty());
      } else {
        // h_n (x) z^{d-n}
        CHECK(h_degree(key.h[0]) + key.ds[1] == d);
      }
    }
  }
}

TEST_CASE("normal ordering respects the window") {
  CHECK_THROWS_AS(normal_order({0, 0, 1}, build_P(1, 0), 1), WindowExceeded);
  CHECK_NOTHROW(normal_order({0, 1}, build_P(1, 0), 2));
}

TEST_CASE("coproduct suites") {
  CHECK(primitivity_suite(3, 3).ok());
  CHECK(expdelta_suite(1, 1, 3).ok());
  CHECK(quasi_empty_component_suite(6).ok());
  CHECK(delta_consistency_suite(6).ok());
  CHECK(hecke_suite(6).ok());
  CHECK(coassociativity_suite(6).ok());
  CHECK(multiplicativity_suite(6).ok());
}

TEST_CASE("bialgebra property") { CHECK(bialgebra_property_suite(6).ok()); }
