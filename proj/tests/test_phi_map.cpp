#include "doctest.h"
#include "shuffle/generators.hpp"
#include "shuffle/phi_map.hpp"

using namespace shuffle;

namespace {

ShuffleElement zpow(int d) { return ShuffleElement::from_parts(1, LaurentPoly::z(0, 1, d)); }

// 1 / (q1^{1/2} - q1^{-1/2}) written out by hand
ParamScalar inv_half_gap() { return ParamScalar(LaurentPoly::param(1, 0), LaurentPoly::param(2, 0) - LaurentPoly::constant(1)); }

}  // namespace

TEST_CASE("phi on a single variable") {
  for (int d = -3; d <= 3; ++d) CHECK(phi(zpow(d)) == inv_half_gap());
  CHECK(phi_of_P(1) == inv_half_gap());
}

TEST_CASE("phi on generators") {
  CHECK(phi(build_P(2, 1)) == inv_half_gap());
  CHECK(phi(build_P(2, 0)) == phi_of_P(2));
  CHECK(phi(build_P(3, 3)) == phi_of_P(3));
  CHECK(phi_P_suite(3, 3).ok());
}

TEST_CASE("phi is linear and twisted multiplicative") {
  ShuffleElement a = build_P(1, 1), b = build_P(2, -1);
  CHECK(phi(a + ParamScalar(3) * zpow(1)) == ParamScalar(4) * phi(a));
  // (k,d) = (1,1), (l,e) = (2,-1): twist q1^{(2 - (-1))/2}
  CHECK(phi(shuffle_mul(a, b)) == phi(a) * phi(b) * ParamScalar::monomial(3, 0));
  CHECK(phi(shuffle_mul(b, a)) == phi(a) * phi(b) * ParamScalar::monomial(-3, 0));
  CHECK(fry_suite(8, 4, 5).ok());
}

TEST_CASE("phi on X elements and Q") {
  CHECK(phi_of_X(EpsilonVector(1, 1, 2, "1")) == ParamScalar(1) / ((q1_pow(1) - 1).pow(2) * (ParamScalar(1) - q2_pow(1))));
  CHECK(phi_X_suite(1, 1, 3).ok());
  CHECK(phi_X_suite(1, 2, 2).ok());
  CHECK(phi_X_suite(2, 1, 2).ok());
  CHECK(phi_Q_suite(1, 1, 3).ok());
  CHECK(phi_Q_suite(1, 0, 2).ok());
}
