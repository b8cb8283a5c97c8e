#include <random>

#include "doctest.h"
#include "shuffle/errors.hpp"
#include "shuffle/shuffle_element.hpp"

using namespace shuffle;

namespace {

ShuffleElement zpow(int d) { return ShuffleElement::from_parts(1, LaurentPoly::z(0, 1, d)); }

LaurentPoly lin(int i, Monomial c, int j, int k) { return LaurentPoly::z(i, k) - LaurentPoly::monomial(c + Monomial::z(j), 1, k); }

}  // namespace

TEST_CASE("z^0 * z^0 matches direct rational arithmetic") {
  const int k = 2;
  Monomial q = pm(2, 1), q1 = pm(2, 0), q2 = pm(0, 1);
  // omega(z1/z2) + omega(z2/z1) over the common denominator
  LaurentPoly n = lin(0, {}, 1, k) * lin(0, q, 1, k) * lin(1, q1, 0, k) * lin(1, q2, 0, k) +
                  lin(1, {}, 0, k) * lin(1, q, 0, k) * lin(0, q1, 1, k) * lin(0, q2, 1, k);
  LaurentPoly v = lin(0, {}, 1, k);
  LaurentPoly p = exact_div(n, v * v);
  auto prod = shuffle_mul(zpow(0), zpow(0));
  CHECK(prod == ShuffleElement::from_parts(2, p));
  CHECK(prod.d() == 0);
  CHECK(make_element(2, p) == prod);
}

TEST_CASE("fast product agrees with the coset reference") {
  std::vector<ShuffleElement> ones = {zpow(-1), zpow(0), zpow(1), zpow(2)};
  auto a = shuffle_mul(ones[1], ones[2]);
  auto b = shuffle_mul(ones[0], ones[3]);
  CHECK(shuffle_mul(a, ones[1]) == shuffle_mul_serial(a, ones[1]));
  CHECK(shuffle_mul(ones[2], a) == shuffle_mul_serial(ones[2], a));
  CHECK(shuffle_mul(a, b) == shuffle_mul_serial(a, b));
  CHECK(shuffle_mul(a, b).str() == shuffle_mul_serial(a, b).str());
}

TEST_CASE("associativity and closure") {
  auto z0 = zpow(0), z1 = zpow(1), z2 = zpow(2);
  auto lhs = shuffle_mul(shuffle_mul(z1, z0), z2);
  auto rhs = shuffle_mul(z1, shuffle_mul(z0, z2));
  CHECK(lhs == rhs);
  CHECK(wheel_check(lhs.num(), 3));
  CHECK(is_symmetric(lhs.num(), 3));
  CHECK(wheel_check(shuffle_mul(shuffle_mul(z0, z0), z0).num(), 3));
}

TEST_CASE("wheel and symmetry violations are reported") {
  CHECK_FALSE(wheel_check(LaurentPoly::constant(1, 3), 3));
  CHECK_THROWS_AS(make_element(3, LaurentPoly::constant(1, 3)), WheelViolation);
  CHECK_THROWS_AS(make_element(2, LaurentPoly::z(0, 2)), SymmetryViolation);
  CHECK(wheel_check(LaurentPoly::constant(1, 2), 2));
}

TEST_CASE("xi profiles and minimality") {
  auto z0 = zpow(0), z1 = zpow(1);
  auto p21 = commutator(z1, z0);
  CHECK(xi_profile(zpow(3)) == std::vector<int>{0, 3});
  CHECK(xi_profile(p21) == std::vector<int>{0, 0, 1});
  CHECK(xi_profile(shuffle_mul(z1, z0)) == std::vector<int>{0, 1, 1});
  CHECK(is_minimal(p21));
  CHECK_FALSE(is_minimal(shuffle_mul(z1, z0)));
  CHECK(is_minimal(zpow(4)));
  CHECK(has_slope_at_most(p21, Rational(1, 2)));
  CHECK_FALSE(has_slope_at_most(shuffle_mul(z1, z0), Rational(1, 2)));
}

TEST_CASE("scaling limits") {
  auto z0 = zpow(0), z1 = zpow(1);
  auto p21 = commutator(z1, z0);
  CHECK_FALSE(scaling_limit(p21, 1, Rational(1, 2)).has_value());
  auto whole = scaling_limit(p21, 2, Rational(1, 2));
  REQUIRE(whole.has_value());
  CHECK(whole->h0_pow == 0);
  CHECK(*whole == TensorElement::pure(p21, ShuffleElement::from_parts(0, LaurentPoly::constant(1)), 0));
  auto lim = scaling_limit(shuffle_mul(z1, z0), 1, 1);
  REQUIRE(lim.has_value());
  CHECK(*lim == TensorElement::pure(z0, z1, 1));
  CHECK_THROWS_AS(scaling_limit(shuffle_mul(z1, z0), 1, Rational(1, 2)), SlopeExceeded);
}

TEST_CASE("serialization round trip") {
  auto e = (ParamScalar(LaurentPoly::param(2, 0)) - ParamScalar(1)).inverse() * shuffle_mul(zpow(1), zpow(-1));
  auto back = ShuffleElement::parse(e.str());
  CHECK(back == e);
  CHECK(back.str() == e.str());
}
