#include <random>

#include "doctest.h"
#include "shuffle/symmetrize.hpp"

using namespace shuffle;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int k, int terms, int lo, int hi) {
  std::uniform_int_distribution<int> ex(lo, hi), co(-4, 4), par(-1, 1);
  std::vector<Term> t;
  for (int n = 0; n < terms; ++n) {
    Monomial m = pm(par(rng), par(rng));
    for (int i = 0; i < k; ++i) m.set(Monomial::z_slot(i), ex(rng));
    t.push_back({m, co(rng)});
  }
  return LaurentPoly::from_terms(k, std::move(t));
}

}  // namespace

TEST_CASE("small schur functions") {
  // a_{(2,0)} / a_{(1,0)} = z1 + z2
  auto g = LaurentPoly::z(0, 2, 2);
  CHECK(alternant_quotient(g, 0, 2).str() == "1 * z2^1 + 1 * z1^1");
  CHECK(alternant_quotient_serial(g, 0, 2) == alternant_quotient(g, 0, 2));
  // repeated exponents vanish
  CHECK(alternant_quotient(LaurentPoly::monomial(Monomial::z(0) + Monomial::z(1), 1, 2), 0, 2).is_zero());
  // the staircase itself gives 1
  CHECK(alternant_quotient(LaurentPoly::monomial(staircase(0, 3), 1, 3), 0, 3) == LaurentPoly::constant(1, 3));
}

TEST_CASE("kernel agrees with the serial reference") {
  std::mt19937 rng(29);
  for (int n = 2; n <= 4; ++n) {
    for (int r = 0; r < 12; ++r) {
      auto g = random_poly(rng, n + 1, 10, -2, 4);
      for (int first = 0; first + n <= n + 1; ++first) {
        auto fast = alternant_quotient(g, first, n);
        CHECK(fast == alternant_quotient_serial(g, first, n));
        CHECK(dominant_part(g, first, n) == dominant_part_serial(g, first, n));
      }
    }
  }
}

TEST_CASE("alternant quotient inverts multiplication by the vandermonde") {
  std::mt19937 rng(31);
  for (int r = 0; r < 10; ++r) {
    auto p = random_poly(rng, 3, 6, -1, 3);
    // symmetrize p first so that p * V is an alternant
    auto sym = LaurentPoly(3);
    for (std::vector<int> perm : {std::vector<int>{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}})
      sym = sym + p.permuted(perm);
    auto alt = sym * LaurentPoly::monomial(staircase(0, 3), 1, 3);
    CHECK(alternant_quotient(alt, 0, 3) == sym);
  }
}
