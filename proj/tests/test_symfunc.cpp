#include "doctest.h"
#include "shuffle/errors.hpp"
#include "shuffle/generators.hpp"
#include "shuffle/symfunc.hpp"

using namespace shuffle;

TEST_CASE("ribbon expressions") {
  RibbonExpr r = ribbon_mul("", "");
  CHECK(r.degree() == 2);
  CHECK(r.terms().size() == 2);
  CHECK((r - RibbonExpr::ribbon("0") - RibbonExpr::ribbon("1")).is_zero());
  CHECK_THROWS_AS(r.add("010", 1), Error);
  CHECK_THROWS_AS(RibbonExpr::ribbon("2"), Error);
  CHECK(ribbon_rows("") == std::vector<int>{1});
  CHECK(ribbon_rows("0110") == std::vector<int>{1, 3, 1});
}

TEST_CASE("power sums through hooks") {
  CHECK_THROWS_AS(hook_powersum(0), Error);
  RibbonExpr p3 = hook_powersum(3);
  CHECK(p3.terms().size() == 3);
  CHECK(p3.terms().at("00") == ParamScalar(1));
  CHECK(p3.terms().at("01") == ParamScalar(-1));
  CHECK(p3.terms().at("11") == ParamScalar(1));
  // p_2 = h_2 - e_2 in two variables
  CHECK(expr_polynomial(hook_powersum(2), 2) == power_sum_polynomial(2, 2));
}

TEST_CASE("ribbon rules as polynomial identities") {
  // s_1 s_1 = h_2 + e_2
  LaurentPoly z1 = LaurentPoly::z(0, 2), z2 = LaurentPoly::z(1, 2);
  CHECK(ribbon_polynomial("1", 2) == z1 * z1 + z1 * z2 + z2 * z2);
  CHECK(ribbon_polynomial("0", 2) == z1 * z2);
  CHECK(ribbon_rule_suite(5).ok());
}

TEST_CASE("isomorphism constant") {
  // n = 1: (q1 - 1)(1 - q2) / ((q1 - 1)^a (1 - q2)^a)
  CHECK(isom_constant(1, 1) == ParamScalar(1));
  CHECK(isom_constant(2, 1) == -(q1_pow(1) + 1) * (ParamScalar(1) + q2_pow(1)) / ((q1_pow(1) - 1) * (ParamScalar(1) - q2_pow(1))));
}

TEST_CASE("ribbon image on rays") {
  // s_empty goes to the one-step X, a multiple of P at n = 1
  CHECK(visa_image(RibbonExpr::ribbon(""), 1, 3) == build_P(1, 3));
  CHECK(visa_image(RibbonExpr::ribbon(""), 2, 1) == isom_constant(1, 2) * build_P(2, 1));
  CHECK(check_visa(1, 1, 3).ok());
  CHECK(check_visa(1, 0, 3).ok());
  CHECK(check_visa(1, -1, 3).ok());
  CHECK(check_visa(2, 1, 2).ok());
}
