#include <numeric>

#include "doctest.h"
#include "shuffle/errors.hpp"
#include "shuffle/generators.hpp"
#include "shuffle/pointwise.hpp"
#include "shuffle/x_identities.hpp"

using namespace shuffle;

namespace {

std::vector<int> first_vars(int k) {
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST_CASE("random points avoid the poles") {
  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    EvalPoint p = random_point(rng, 5);
    CHECK(p.z.size() == 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        if (i != j) CHECK_NOTHROW(eval_omega(p, i, j));
  }
}

TEST_CASE("pointwise X matches the symbolic element") {
  std::mt19937 rng(11);
  for (const auto& e : {EpsilonVector(1, 0, 3, "10"), EpsilonVector(2, 1, 2, "0"), EpsilonVector(1, -1, 4, "011"), EpsilonVector(3, 1, 1, "")}) {
    CAPTURE(e.key());
    EvalPoint p = random_point(rng, e.k());
    auto v = first_vars(e.k());
    CHECK(eval_X(e.exponents(), p, v) == eval_element(build_X_eps(e), p));
  }
}

TEST_CASE("pointwise product matches the shuffle product") {
  std::mt19937 rng(5);
  EpsilonVector a(1, 1, 2, "1"), b(1, 0, 3, "01");
  EvalPoint p = random_point(rng, 5);
  auto v = first_vars(5);
  Rational got = product(x_fn(a), 2, x_fn(b))(p, v);
  CHECK(got == eval_element(shuffle_mul(build_X_eps(a), build_X_eps(b)), p));
  CHECK(got != eval_element(shuffle_mul(build_X_eps(b), build_X_eps(a)), p));
  // a scalar and a sum
  PointFn twice = sum(x_fn(a), scaled(1, x_fn(a)));
  CHECK(twice(p, first_vars(2)) == Rational(2) * eval_X(a.exponents(), p, first_vars(2)));
}

TEST_CASE("pointwise evaluation detects a wrong identity") {
  // X_e * X_f = X_(e0f) - q X_(e1f); flipping the sign must fail at k = 8
  std::mt19937 rng(2);
  EpsilonVector e(2, 1, 2, "0"), f(2, 1, 2, "1"), good0(2, 1, 4, "001"), good1(2, 1, 4, "011");
  EvalPoint p = random_point(rng, 8);
  auto v = first_vars(8);
  Rational lhs = product(x_fn(e), 4, x_fn(f))(p, v);
  Rational x0 = eval_X(good0.exponents(), p, v), x1 = eval_X(good1.exponents(), p, v);
  CHECK(lhs == x0 - p.q() * x1);
  CHECK(lhs != x0 + p.q() * x1);
}

TEST_CASE("id1 and concatenation, symbolic range") {
  CHECK(id1_suite(1, 1, 4).ok());
  CHECK(id1_suite(1, 2, 4).ok());
  CHECK(id1_suite(1, -1, 3).ok());
  CHECK(x_concat_suite(1, 1, 2).ok());
  CHECK(x_concat_suite(1, 0, 2).ok());
  Report r = id1_suite(2, 1, 2);
  REQUIRE(r.lines.size() == 1);
  CHECK(r.lines[0].detail == "symbolic, k=4");
}
