#include "doctest.h"
#include "shuffle/errors.hpp"
#include "shuffle/generators.hpp"

using namespace shuffle;

namespace {

ShuffleElement zpow(int d) { return ShuffleElement::from_parts(1, LaurentPoly::z(0, 1, d)); }

WordExpression w(std::vector<int> v, const ParamScalar& c = 1) { return WordExpression::word(std::move(v), c); }

// Two-variable X_{m1,m2} straight from its symmetrization: the summand
// z1^{m1+1} z2^{m2} (z2 - q1 z1)(z2 - q2 z1) / (z1 - z2) plus its swap.
ShuffleElement x2_oracle(int m1, int m2) {
  LaurentPoly a = LaurentPoly::monomial(Monomial::z(0, m1 + 1) + Monomial::z(1, m2), 1, 2);
  a = a.times_linear(1, pm(2, 0), 0).times_linear(1, pm(0, 1), 0);
  std::vector<int> swap = {1, 0};
  return ShuffleElement::from_parts(2, divide_by_difference(a - a.permuted(swap), 0, 1));
}

ShuffleElement x_hook(int a, int b, int r, int s) { return build_X_eps(EpsilonVector(a, b, r + s + 1, hook_bits(r, s))); }

}  // namespace

TEST_CASE("alpha") {
  ParamScalar q1 = q1_pow(1), q2 = q2_pow(1), q = q_pow(1);
  CHECK(alpha(1) == (q1 - 1) * (q2 - 1) * (q.inverse() - 1));
  CHECK(alpha(2) == (q1 * q1 - 1) * (q2 * q2 - 1) * (q.pow(-2) - 1) / ParamScalar(2));
  // q1 <-> q2: (s, q2) = (2, 9) against (3, 4)
  for (int n = 1; n <= 4; ++n) CHECK(alpha(n).evaluate(2, 9) == alpha(n).evaluate(3, 4));
  CHECK_THROWS_AS(alpha(0), Error);
}

TEST_CASE("words evaluate to shuffle products") {
  CHECK(word_to_element(w({3})) == zpow(3));
  CHECK(word_to_element(w({0, 0})) == shuffle_mul(zpow(0), zpow(0)));
  CHECK(word_to_element(w({1, 0}) - w({0, 1})) == commutator(zpow(1), zpow(0)));
  WordExpression a = w({1}, q_pow(1)) + w({1}, 2), b = w({0, -1}) + w({-1, 0}, q1_pow(1) - 1);
  CHECK(word_to_element(a * b) == shuffle_mul(word_to_element(a), word_to_element(b)));
  CHECK(word_to_element(b * a) == shuffle_mul(word_to_element(b), word_to_element(a)));
  CHECK(word_to_element(w({2, 0}, alpha(1).inverse())) == alpha(1).inverse() * shuffle_mul(zpow(2), zpow(0)));
  CHECK_THROWS_AS(word_to_element(w({1}) + w({2})), Error);
  CHECK_THROWS_AS(word_to_element(WordExpression{}), Error);
  CHECK((w({1}) * w({2})).terms().begin()->first == std::vector<int>{1, 2});
  CHECK(bracket(w({1}), w({1})).is_zero());
}

TEST_CASE("X elements") {
  std::vector<int> one = {4};
  CHECK(build_X(one) == zpow(4));
  for (int m1 = -1; m1 <= 2; ++m1)
    for (int m2 = -1; m2 <= 2; ++m2) {
      std::vector<int> m = {m1, m2};
      CHECK(build_X(m) == x2_oracle(m1, m2));
    }
  std::vector<int> m01 = {0, 1};
  CHECK((q1_pow(1) - 1) * (ParamScalar(1) - q2_pow(1)) * build_X(m01) == build_P(2, 1));
  std::vector<int> m102 = {1, 0, 2};
  auto x = build_X(m102);
  CHECK(wheel_check(x.num(), 3));
  CHECK(is_symmetric(x.num(), 3));
}

TEST_CASE("epsilon vectors") {
  EpsilonVector e0(1, 1, 2, "0"), e1(1, 1, 2, "1");
  CHECK(e0.exponents() == std::vector<int>{1, 1});
  CHECK(e1.exponents() == std::vector<int>{0, 2});
  CHECK(e0.eps(0) == 1);
  CHECK(e0.eps(2) == 0);
  CHECK(e1.eps(1) == 1);
  EpsilonVector e(2, -1, 3, "10");
  CHECK(e.k() == 6);
  CHECK(e.d() == -3);
  CHECK(e.S(0) == 0);
  CHECK(e.S(6) == -3);
  CHECK(e.S(2) == -2);
  CHECK(e.S(4) == -2);
  CHECK(e.ones() == 1);
  CHECK_THROWS_AS(EpsilonVector(2, 2, 2, "0"), Error);
  CHECK_THROWS_AS(EpsilonVector(1, 1, 3, "0"), Error);
  CHECK_THROWS_AS(EpsilonVector(1, 1, 2, "2"), Error);
}

TEST_CASE("X^eps has slope at most d/k") {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 0}, {1, -1}, {2, 1}}) {
    for (int n = 1; n * a <= 4; ++n) {
      for (int bits = 0; bits < (1 << (n - 1)); ++bits) {
        std::string s;
        for (int j = 0; j < n - 1; ++j) s += (bits >> j & 1) ? '1' : '0';
        EpsilonVector e(a, b, n, s);
        auto prof = xi_profile(build_X_eps(e));
        for (int i = 1; i <= e.k(); ++i) CHECK(prof[i] <= floor_div(e.d() * i, e.k()));
        CHECK(has_slope_at_most(build_X_eps(e), Rational(b, a)));
      }
    }
  }
}

TEST_CASE("closed-form generators") {
  for (int d = -3; d <= 3; ++d) CHECK(build_P(1, d) == zpow(d));
  CHECK(build_P(2, 1) == word_to_element(w({1, 0}) - w({0, 1})));
  CHECK(is_minimal(build_P(3, 2)));
  for (int k = 2; k <= 4; ++k)
    for (int d : {-2, 0, 1, 2, 3}) {
      CAPTURE(k);
      CAPTURE(d);
      auto p = build_P(k, d);
      CHECK(p == build_P_literal(k, d));
      CHECK(is_minimal(p));
      CHECK(wheel_check(p.num(), k));
    }
}

TEST_CASE("recursive generators") {
  CHECK(build_P_recursive(1, 4).word == w({4}));
  CHECK(build_P_recursive(2, 1).element == build_P(2, 1));
  CHECK(build_P_recursive(2, 1).word == w({1, 0}) - w({0, 1}));
  CHECK(build_P_recursive(2, 0).element == build_P(2, 0));
  for (auto [k, d] : std::vector<std::pair<int, int>>{{2, 0}, {3, 1}, {3, 0}, {2, -3}}) {
    auto r = build_P_recursive(k, d);
    CHECK(word_to_element(r.word) == r.element);
    CHECK(r.element == build_P(k, d));
  }
  CHECK(build_P_recursive(3, 0, 1).element == build_P(3, 0));
  CHECK(build_P_recursive(4, 2, 1).element == build_P(4, 2));
  CHECK_THROWS_AS(build_P_recursive(2, 1, 1), Error);
}

TEST_CASE("theta and Q along a ray") {
  auto tq = build_theta_Q(1, 1, 2);
  CHECK(tq.theta[0] == alpha(1) * build_P(1, 1));
  CHECK(tq.Q[0] == alpha(1) * build_P(1, 1));
  auto p11 = build_P(1, 1);
  CHECK(tq.Q[1] == alpha(2) * build_P(2, 2) + alpha(1) * alpha(1) / ParamScalar(2) * shuffle_mul(p11, p11));
  CHECK(tq.theta[1] == tq.Q[1]);
  auto t3 = build_theta_Q(1, 0, 3);
  CHECK(t3.theta[2] == t3.Q[2]);
  CHECK_THROWS_AS(build_theta_Q(2, 2, 1), Error);
}

TEST_CASE("drag identity on small rays") {
  ParamScalar q = q_pow(1);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}}) {
    for (int t = 2; t * a <= 4; ++t) {
      auto lhs = x_hook(a, b, t - 1, 0) - q.pow(t - 1) * x_hook(a, b, 0, t - 1);
      ShuffleElement rhs = ShuffleElement::zero(t * a, t * b);
      for (int r = 0; r <= t - 2; ++r) {
        int s = t - 2 - r;
        rhs = rhs + q.pow(s) * shuffle_mul(x_hook(a, b, r, 0), x_hook(a, b, 0, s));
      }
      CAPTURE(a);
      CAPTURE(t);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("X concatenation") {
  ParamScalar q = q_pow(1);
  std::vector<std::string> strs = {"", "0", "1"};
  for (const auto& e : strs)
    for (const auto& f : strs) {
      if (e.size() + f.size() > 2) continue;
      auto x = [](const std::string& s) { return build_X_eps(EpsilonVector(1, 1, int(s.size()) + 1, s)); };
      CAPTURE(e);
      CAPTURE(f);
      CHECK(shuffle_mul(x(e), x(f)) == x(e + "0" + f) - q * x(e + "1" + f));
    }
}

TEST_CASE("lattice triangles") {
  CHECK(classify_triangle({1, 1, 1, 0}) == TriangleClass::kEmpty);
  CHECK(classify_triangle({1, 1, 2, 1}) == TriangleClass::kEmpty);
  CHECK(classify_triangle({2, 2, 1, 0}) == TriangleClass::kQuasiEmpty);
  CHECK(classify_triangle({1, 0, 1, 1}) == TriangleClass::kNeither);
  CHECK(classify_triangle({1, 0, 1, 0}) == TriangleClass::kNeither);
  CHECK(classify_triangle({3, 3, 1, -1}) == TriangleClass::kNeither);
  auto t20 = ranked_empty_triangles(2, 0);
  REQUIRE(t20.size() == 1);
  CHECK(t20[0].k2 == 1);
  CHECK(t20[0].d2 == -1);
  auto t21 = ranked_empty_triangles(2, 1);
  REQUIRE(t21.size() == 1);
  CHECK(t21[0].d2 == 0);
  CHECK(ranked_empty_triangles(3, 0).size() == 2);
  for (int k = 2; k <= 5; ++k)
    for (int d = -5; d <= 5; ++d) CHECK(!ranked_empty_triangles(k, d).empty());
}
