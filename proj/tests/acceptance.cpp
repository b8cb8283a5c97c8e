// Acceptance run: one line per criterion, exact equality throughout.
#include <omp.h>

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <string>

#include "shuffle/bialgebra.hpp"
#include "shuffle/generators.hpp"
#include "shuffle/hall_geometry.hpp"
#include "shuffle/phi_map.hpp"
#include "shuffle/suites.hpp"
#include "shuffle/symfunc.hpp"
#include "shuffle/x_identities.hpp"

using namespace shuffle;

namespace {

// Criteria that fail for a reason written up in the decisions ledger.
const std::set<int> kRecordedBlockers = {8};

struct Outcome {
  Report report;
  std::string summary;
};

std::string count_line(const Report& r) {
  return std::to_string(r.lines.size() - r.failures()) + "/" + std::to_string(r.lines.size()) + " checks";
}

Outcome c1() {
  Report r = main_theorem_suite(standard_grid());
  return {r, count_line(r) + ", build_P equals the commutator construction on k<=4 |d|<=5 and (5,+-1), (5,+-2)"};
}

Outcome c2() {
  Report r = minimal_suite(standard_grid());
  return {r, count_line(r) + ", every P(k,d) on the grid minimal, z1*z0 not"};
}

Outcome c3() {
  Report r = wheel_suite(50, 5, 1);
  return {r, count_line(r) + ", random products with total k<=5 symmetric and wheel"};
}

Outcome c4() {
  Report r = slope_suite(30, 4, 1);
  return {r, count_line(r) + ", profile subadditivity and leading-term factorization on 30 pairs"};
}

Outcome c5() {
  Report r = hall_coverage_suite(4, 3);
  return {r, count_line(r) + ", collinear and empty-triangle relations with total k<=4 (" + r.lines.back().detail + ")"};
}

Outcome c6() {
  Report r;
  for (auto [a, b] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    r.append(id1_suite(a, b, 4));
    r.append(x_concat_suite(a, b, 3));
  }
  int pointwise = 0;
  for (const auto& l : r.lines) pointwise += l.detail.rfind("pointwise", 0) == 0;
  return {r, count_line(r) + ", id1 t<=4 and concatenation |e|+|f|<=3 on rays (1,1) (2,1) (1,2); " + std::to_string(pointwise) +
                 " beyond six variables checked pointwise"};
}

Outcome c7() {
  Report r = fry_suite(30, 5, 1);
  r.append(phi_P_suite(4, 5, {{5, -2}, {5, -1}, {5, 1}, {5, 2}}));
  for (auto [a, b] : {std::pair{1, 1}, {1, 2}, {2, 1}}) r.append(phi_X_suite(a, b, 3));
  r.append(phi_Q_suite(1, 1, 3));
  return {r, count_line(r) + ", twisted multiplicativity on 30 pairs, phi(P) on the grid, phi(X) n<=3"};
}

// stated orientation (a*b, c) = (a (x) b, Delta c) on single letters
int stated_orientation_failures(int* checked) {
  int bad = 0;
  *checked = 0;
  for (int x = -1; x <= 1; ++x)
    for (int y = -1; y <= 1; ++y)
      for (int u = -1; u <= 1; ++u) {
        const int v = x + y - u;
        if (v < -1 || v > 1) continue;
        ShuffleElement c = word_to_element(WordExpression::word({u, v}));
        ParamScalar lhs = pair_word_element(WordExpression::word({x, y}), c);
        ParamScalar rhs = pair_words_tensor({WordExpression::word({x}), WordExpression::word({y})}, delta_truncated(c, 6));
        ++*checked;
        bad += lhs != rhs;
      }
  return bad;
}

Outcome c8() {
  Report pairing = pairing_suite();
  Report stated = gram_suite(GramConvention::kStated);
  Report hopf = gram_suite(GramConvention::kHopf);
  Report bialg = bialgebra_property_suite(6);
  int checked = 0;
  const int oriented = stated_orientation_failures(&checked);

  Report r = pairing;
  r.append(stated);
  r.append(bialg);
  r.add("bialgebra property, (a (x) b) orientation", oriented == 0,
        std::to_string(oriented) + " of " + std::to_string(checked) + " single-letter triples differ");
  std::string s = "pairing lines " + std::to_string(pairing.lines.size() - pairing.failures()) + "/" +
                  std::to_string(pairing.lines.size()) + "; stated Gram " + std::to_string(stated.lines.size() - stated.failures()) + "/" +
                  std::to_string(stated.lines.size()) + "; decreasing-slope Gram " + std::to_string(hopf.lines.size() - hopf.failures()) +
                  "/" + std::to_string(hopf.lines.size()) + "; bialgebra as (b (x) a) " + (bialg.ok() ? "holds" : "fails") +
                  ", as (a (x) b) " + std::to_string(oriented) + "/" + std::to_string(checked) + " differ";
  return {r, s};
}

Outcome c9() {
  Report r = primitivity_suite(5, 5);
  r.append(expdelta_suite(1, 1, 3));
  r.append(multiplicativity_suite(6));
  r.append(quasi_empty_component_suite(6));
  return {r, count_line(r) + ", primitivity on the grid, expdelta n=2,3, multiplicativity and quasi-empty component at W=6"};
}

Outcome c10() {
  Report r = dimension_suite(3, 3);
  return {r, count_line(r) + ", basis_rank = count_collections for k<=3 |d|<=3"};
}

Outcome c11() {
  Report r = check_visa(1, 1, 3);
  r.append(check_visa(2, 1, 3));
  return {r, count_line(r) + ", ribbon products and hook power sums on rays (1,1) and (2,1), n<=3"};
}

Outcome c12() {
  Report r = determinism_suite(standard_grid());
  std::string s = count_line(r);
  for (const auto& l : r.lines) s += "; " + l.detail;
  return {r, s};
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12};
  int unrecorded = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.report.add("exception", false, e.what());
      o.summary = std::string("threw: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = o.report.ok() && !o.report.lines.empty();
    std::cout << "criterion " << n << (pass ? " PASS " : " FAIL ") << o.summary;
    if (!pass && kRecordedBlockers.count(n)) std::cout << " [recorded blocker]";
    std::cout << " (" << static_cast<long>(secs + 0.5) << "s)" << std::endl;
    if (!pass) {
      int shown = 0;
      for (const auto& l : o.report.lines)
        if (!l.pass && shown++ < 6) {
          std::string line = l.str();
          if (line.size() > 200) line = line.substr(0, 200) + " ...";
          std::cout << "    " << line << "\n";
        }
      if (!kRecordedBlockers.count(n)) ++unrecorded;
    }
  }
  std::cout << (unrecorded ? "acceptance: unrecorded failures" : "acceptance: no unrecorded failures") << std::endl;
  return unrecorded ? 1 : 0;
}
