#include <set>

#include "doctest.h"
#include "shuffle/errors.hpp"
#include "shuffle/generators.hpp"
#include "shuffle/hall_geometry.hpp"

using namespace shuffle;

namespace {

// Brute-force lattice scan: interior points and points inside the edges XY, YZ.
struct Scan {
  int interior = 0;
  bool xy_clean = true;
  bool yz_clean = true;
};

long side(long ax, long ay, long bx, long by, long px, long py) { return (bx - ax) * (py - ay) - (by - ay) * (px - ax); }

Scan scan(const LatticeTriangle& t) {
  Scan s;
  long xs[3] = {0, t.k2, t.k()}, ys[3] = {0, t.d2, t.d()};
  long lo_x = 0, hi_x = t.k(), lo_y = std::min({0L, ys[1], ys[2]}), hi_y = std::max({0L, ys[1], ys[2]});
  for (long x = lo_x; x <= hi_x; ++x)
    for (long y = lo_y; y <= hi_y; ++y) {
      long a = side(xs[0], ys[0], xs[1], ys[1], x, y);
      long b = side(xs[1], ys[1], xs[2], ys[2], x, y);
      long c = side(xs[2], ys[2], xs[0], ys[0], x, y);
      bool vertex = (x == xs[0] && y == ys[0]) || (x == xs[1] && y == ys[1]) || (x == xs[2] && y == ys[2]);
      if (vertex) continue;
      if ((a > 0 && b > 0 && c > 0) || (a < 0 && b < 0 && c < 0)) ++s.interior;
      auto on = [&](long ax, long ay, long bx, long by, long cross) {
        return cross == 0 && std::min(ax, bx) <= x && x <= std::max(ax, bx) && std::min(ay, by) <= y && y <= std::max(ay, by);
      };
      if (on(xs[0], ys[0], xs[1], ys[1], a)) s.xy_clean = false;
      if (on(xs[1], ys[1], xs[2], ys[2], b)) s.yz_clean = false;
    }
  return s;
}

// Unordered collections by brute force over a box of d values.
long brute_count(int k, int d, const Rational& mu) {
  std::set<std::multiset<std::pair<int, int>>> seen;
  std::multiset<std::pair<int, int>> cur;
  auto rec = [&](auto&& self, int rk, int rd) -> void {
    if (rk == 0) {
      if (rd == 0) seen.insert(cur);
      return;
    }
    for (int ki = 1; ki <= rk; ++ki)
      for (int di = -12; di <= 12; ++di) {
        if (mu * Rational(ki) < Rational(di)) continue;
        cur.insert({ki, di});
        self(self, rk - ki, rd - di);
        cur.erase(cur.find({ki, di}));
      }
  };
  rec(rec, k, d);
  return static_cast<long>(seen.size());
}

}  // namespace

TEST_CASE("classification agrees with a lattice scan") {
  for (int k1 = 1; k1 <= 3; ++k1)
    for (int k2 = 1; k2 <= 3; ++k2)
      for (int d1 = -3; d1 <= 3; ++d1)
        for (int d2 = -3; d2 <= 3; ++d2) {
          LatticeTriangle t{k1, d1, k2, d2};
          if (long(k2) * d1 - long(k1) * d2 <= 0) {
            CHECK(classify_triangle(t) == TriangleClass::kNeither);
            continue;
          }
          Scan s = scan(t);
          CHECK(interior_points(t) == s.interior);
          TriangleClass want = s.interior != 0                ? TriangleClass::kNeither
                               : (s.xy_clean && s.yz_clean)   ? TriangleClass::kEmpty
                               : (s.xy_clean || s.yz_clean)   ? TriangleClass::kQuasiEmpty
                                                              : TriangleClass::kNeither;
          CAPTURE(t.str());
          CHECK(classify_triangle(t) == want);
        }
}

TEST_CASE("collection counts") {
  CHECK(count_collections(1, 4, Rational(4)) == 1);
  CHECK(count_collections(1, 4, Rational(7)) == 1);
  CHECK(count_collections(2, 0, Rational(0)) == 2);
  CHECK(count_collections(2, 1, Rational(1, 2)) == 1);
  CHECK(count_collections(0, 0, Rational(0)) == 1);
  for (int k = 1; k <= 3; ++k)
    for (int d = -3; d <= 3; ++d)
      for (Rational mu : {Rational(d, k), Rational(0), Rational(1), Rational(-1, 2)}) {
        CAPTURE(k);
        CAPTURE(d);
        CHECK(count_collections(k, d, mu) == brute_count(k, d, mu));
      }
  for (const auto& c : enumerate_collections(3, 0, Rational(1)))
    for (std::size_t i = 1; i < c.parts.size(); ++i) CHECK_FALSE(slope_less(c.parts[i], c.parts[i - 1]));
}

TEST_CASE("relations") {
  CHECK(verify_relation0({1, 1}, {2, 2}).pass);
  CHECK(verify_relation0({1, 0}, {2, 0}).pass);
  CHECK(verify_relation0({1, 1}, {1, 1}).pass);
  CHECK_FALSE(verify_relation0({1, 1}, {1, 0}).pass);
  CHECK(verify_relation({1, 1, 1, 0}).pass);
  CHECK(verify_relation({1, 1, 1, -1}).pass);
  CHECK(verify_relation({2, 2, 1, 0}).pass);
  CHECK(classify_triangle({2, 2, 1, 0}) == TriangleClass::kQuasiEmpty);
  CHECK_FALSE(verify_relation({1, 0, 1, 1}).pass);
  CHECK(alpha(1) * build_P(2, 1) == build_theta_Q(2, 1, 1).theta[0]);
}

TEST_CASE("dimension counts") {
  CHECK(basis_rank(2, 0, Rational(0)) == 2);
  CHECK(basis_rank(2, 1, Rational(1, 2)) == 1);
  CHECK(basis_rank(3, 1, Rational(1, 3)) == count_collections(3, 1, Rational(1, 3)));
  CHECK(basis_rank(3, 0, Rational(1)) == count_collections(3, 0, Rational(1)));
  CHECK_THROWS_AS(basis_rank(5, 0, Rational(0), 4), ResourceLimit);
  // a dependent family is detected
  auto p = build_P(2, 1);
  CHECK(element_rank({p, alpha(1) * p}) == 1);
  CHECK(element_rank({p, build_P(2, 1) - p, shuffle_mul(build_P(1, 1), build_P(1, 0))}) == 2);
}
