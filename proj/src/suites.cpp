#include "shuffle/suites.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdio>
#include <random>

#include "shuffle/errors.hpp"
#include "shuffle/generators.hpp"
#include "shuffle/hall_geometry.hpp"
#include "shuffle/lattice.hpp"

namespace shuffle {
namespace {

std::string bideg(int k, int d) { return "(" + std::to_string(k) + "," + std::to_string(d) + ")"; }

std::string profile_str(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

// one or two words of length k, letters in [-2, 2]
ShuffleElement random_element(std::mt19937& rng, int k) {
  std::uniform_int_distribution<int> letter(-2, 2), coeff(1, 3), count(1, 2);
  for (;;) {
    const int words = count(rng);
    WordExpression w;
    int d = 0;
    for (int t = 0; t < words; ++t) {
      std::vector<int> word(k);
      for (auto& x : word) x = letter(rng);
      int dw = 0;
      for (int x : word) dw += x;
      // keep the expression homogeneous: later words reuse the first degree
      if (t == 0) d = dw;
      if (dw != d) word[k - 1] += d - dw;
      w = w + WordExpression::word(word, coeff(rng));
    }
    if (!w.is_zero()) return word_to_element(w);
  }
}

// smallest mu with entry_i <= mu i for all i >= 1
Rational min_slope(const std::vector<int>& prof) {
  Rational mu(prof.back(), static_cast<int64_t>(prof.size()) - 1);
  for (std::size_t i = 1; i < prof.size(); ++i) mu = std::max(mu, Rational(prof[i], static_cast<int64_t>(i)));
  return mu;
}

std::vector<std::string> canonical_grid(const Grid& grid, int rank, std::vector<bool>* has_rank = nullptr) {
  std::vector<std::string> out(grid.size());
  if (has_rank) has_rank->assign(grid.size(), true);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t g = 0; g < grid.size(); ++g) {
    auto [k, d] = grid[g];
    if (rank == 0) {
      out[g] = build_P(k, d).str();
      continue;
    }
    try {
      out[g] = build_P_recursive(k, d, rank).element.str();
    } catch (const Error&) {
      (*has_rank)[g] = false;
    }
  }
  return out;
}

}  // namespace

Grid make_grid(int max_k, int max_d, const Grid& extra) {
  Grid g;
  for (int k = 1; k <= max_k; ++k)
    for (int d = -max_d; d <= max_d; ++d) g.emplace_back(k, d);
  g.insert(g.end(), extra.begin(), extra.end());
  return g;
}

Grid standard_grid() { return make_grid(4, 5, {{5, -2}, {5, -1}, {5, 1}, {5, 2}}); }

Report main_theorem_suite(const Grid& grid, std::vector<std::string>* canon) {
  std::vector<CheckLine> lines(grid.size());
  std::vector<std::string> text(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t g = 0; g < grid.size(); ++g) {
    auto [k, d] = grid[g];
    ShuffleElement closed = build_P(k, d);
    RecursiveP rec = build_P_recursive(k, d);
    bool ok = closed == rec.element;
    lines[g] = {"main P" + bideg(k, d), ok, ok ? std::to_string(closed.num().size()) + " terms" : "closed formula and commutator construction differ"};
    text[g] = closed.str();
  }
  Report rep;
  for (auto& l : lines) rep.add(std::move(l));
  if (canon) canon->insert(canon->end(), text.begin(), text.end());
  return rep;
}

Report minimal_suite(const Grid& grid) {
  Report rep;
  for (auto [k, d] : grid) {
    ShuffleElement p = build_P(k, d);
    bool ok = is_minimal(p);
    rep.add("minimal P" + bideg(k, d), ok, profile_str(xi_profile(p)));
  }
  ShuffleElement z1 = word_to_element(WordExpression::word({1})), z0 = word_to_element(WordExpression::word({0}));
  ShuffleElement prod = shuffle_mul(z1, z0);
  rep.add("minimal z1*z0", !is_minimal(prod), "not minimal, profile " + profile_str(xi_profile(prod)));
  return rep;
}

Report wheel_suite(int count, int max_k, std::uint32_t seed) {
  Report rep;
  std::mt19937 rng(seed);
  for (int t = 0; t < count; ++t) {
    std::uniform_int_distribution<int> ka(1, max_k - 1);
    const int k1 = ka(rng);
    std::uniform_int_distribution<int> kb(1, max_k - k1);
    const int k2 = kb(rng);
    ShuffleElement p = shuffle_mul(random_element(rng, k1), random_element(rng, k2));
    std::string why;
    bool ok = is_symmetric(p.num(), p.k(), &why) && wheel_check(p.num(), p.k(), &why);
    rep.add("wheel#" + std::to_string(t) + " k=" + std::to_string(k1) + "+" + std::to_string(k2), ok,
            ok ? "symmetric, wheel conditions hold" : why);
  }
  return rep;
}

Report slope_suite(int pairs, int max_k, std::uint32_t seed) {
  Report rep;
  std::mt19937 rng(seed);
  for (int t = 0; t < pairs; ++t) {
    std::uniform_int_distribution<int> ka(1, max_k - 1);
    const int k1 = ka(rng);
    std::uniform_int_distribution<int> kb(1, max_k - k1);
    const int k2 = kb(rng);
    ShuffleElement a = random_element(rng, k1), b = random_element(rng, k2);
    ShuffleElement p = shuffle_mul(a, b);
    const std::string id = "slope#" + std::to_string(t) + " k=" + std::to_string(k1) + "+" + std::to_string(k2);
    auto pa = xi_profile(a), pb = xi_profile(b), pp = xi_profile(p);
    bool sub = true;
    for (int j = 0; j <= k1 + k2; ++j) {
      int bound = kNoDegree;
      for (int i = std::max(0, j - k2); i <= std::min(j, k1); ++i) bound = std::max(bound, pa[i] + pb[j - i]);
      if (pp[j] != kNoDegree && pp[j] > bound) sub = false;
    }
    rep.add(id + " profile", sub, profile_str(pa) + " x " + profile_str(pb) + " -> " + profile_str(pp));
    // leading terms at the common slope bound
    const Rational mu = std::max(min_slope(pa), min_slope(pb));
    bool fac = true;
    std::string where;
    for (int i = 0; i <= k1 + k2 && fac; ++i) {
      std::optional<TensorElement> whole = scaling_limit(p, i, mu), parts;
      for (int i1 = std::max(0, i - k2); i1 <= std::min(i, k1); ++i1) {
        auto la = scaling_limit(a, i1, mu), lb = scaling_limit(b, i - i1, mu);
        if (!la || !lb) continue;
        TensorElement term = tensor_mul(*la, *lb);
        parts = parts ? *parts + term : term;
      }
      const bool wz = !whole || whole->is_zero(), pz = !parts || parts->is_zero();
      if (wz != pz || (!wz && !(*whole == *parts))) {
        fac = false;
        where = "split " + std::to_string(i);
      }
    }
    rep.add(id + " factorization", fac, fac ? "limits at slope " + mu.str() + " factor" : "mismatch at " + where);
  }
  return rep;
}

Report hall_coverage_suite(int max_k, int max_d) {
  Report rep = hall_suite(max_k, max_d);
  bool quasi = false, ray2 = false;
  for (const auto& l : rep.lines) {
    if (l.detail.rfind("quasi-empty", 0) == 0) quasi = true;
    if (l.id.rfind("relation", 0) == 0) {
      int k1, d1, k2, d2;
      if (std::sscanf(l.id.c_str(), "relation(%d,%d)+(%d,%d)", &k1, &d1, &k2, &d2) == 4 && gcd_abs(k1 + k2, d1 + d2) == 2) ray2 = true;
    }
  }
  rep.add("hall coverage", quasi && ray2, std::string(quasi ? "quasi-empty triangle present" : "no quasi-empty triangle") + ", " + (ray2 ? "gcd-2 ray present" : "no gcd-2 ray"));
  return rep;
}

Report dimension_suite(int max_k, int max_d) {
  Report rep;
  for (int k = 1; k <= max_k; ++k)
    for (int d = -max_d; d <= max_d; ++d)
      for (const Rational& mu : {Rational(d, k), Rational(0), Rational(1)}) {
        const long want = count_collections(k, d, mu);
        const int got = basis_rank(k, d, mu);
        rep.add("dim " + bideg(k, d) + " mu=" + mu.str(), got == want, "rank " + std::to_string(got) + ", collections " + std::to_string(want));
      }
  return rep;
}

Report determinism_suite(const Grid& grid) {
  Report rep;
  clear_generator_memo();
  const int workers = std::max(2, omp_get_max_threads());
  omp_set_num_threads(workers);
  std::vector<std::string> first = canonical_grid(grid, 0);
  clear_generator_memo();
  std::vector<std::string> again = canonical_grid(grid, 0);
  rep.add("determinism rerun", first == again, first == again ? "byte-identical after a cold rerun" : "outputs differ between runs");
  clear_generator_memo();
  omp_set_num_threads(1);
  std::vector<std::string> serial = canonical_grid(grid, 0);
  omp_set_num_threads(workers);
  rep.add("determinism workers", first == serial,
          first == serial ? "1 and " + std::to_string(workers) + " workers agree" : "outputs depend on the worker count");
  std::vector<bool> has;
  std::vector<std::string> second = canonical_grid(grid, 1, &has);
  int compared = 0;
  bool same = true;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    if (!has[g]) continue;
    ++compared;
    if (second[g] != first[g]) same = false;
  }
  rep.add("determinism triangles", same && compared > 0,
          std::to_string(compared) + " bidegrees with a second-ranked triangle" + (same ? ", all identical" : ", some differ"));
  return rep;
}

}  // namespace shuffle
