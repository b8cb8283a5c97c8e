#include "doctest.h"
#include "shuffle/suites.hpp"

using namespace shuffle;

TEST_CASE("grids") {
  CHECK(make_grid(2, 1).size() == 6);
  Grid g = standard_grid();
  CHECK(g.size() == 48);
  CHECK(g.back() == std::pair{5, 2});
}

TEST_CASE("main theorem and minimality on a small grid") {
  std::vector<std::string> canon;
  Report r = main_theorem_suite(make_grid(3, 2), &canon);
  CHECK(r.ok());
  CHECK(canon.size() == 15);
  CHECK(canon.front().rfind("k=1 d=-2\n", 0) == 0);
  Report m = minimal_suite(make_grid(3, 2));
  CHECK(m.ok());
  CHECK(m.lines.back().id == "minimal z1*z0");
}

TEST_CASE("closure and slope") {
  CHECK(wheel_suite(8, 4, 3).ok());
  Report s = slope_suite(10, 4, 2);
  CHECK(s.lines.size() == 20);
  CHECK(s.ok());
}

TEST_CASE("hall coverage and dimension") {
  Report h = hall_coverage_suite(3, 2);
  CHECK(h.ok());
  CHECK(h.lines.back().id == "hall coverage");
  CHECK(dimension_suite(2, 2).ok());
}

TEST_CASE("determinism on a small grid") {
  Report d = determinism_suite(make_grid(3, 3));
  CHECK(d.lines.size() == 3);
  CHECK(d.ok());
}
