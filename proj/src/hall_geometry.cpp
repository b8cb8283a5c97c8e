#include "shuffle/hall_geometry.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "shuffle/errors.hpp"
#include "shuffle/generators.hpp"

namespace shuffle {
namespace {

std::string bideg(Bidegree p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; }

std::string mismatch(const ShuffleElement& lhs, const ShuffleElement& rhs) {
  ShuffleElement diff = lhs - rhs;
  return "difference has " + std::to_string(diff.num().size()) + " numerator terms";
}

// floor(mu * k) for rational mu.
long floor_mul(const Rational& mu, int k) {
  Rational v = mu * Rational(k);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v.numerator().get_mpz_t(), v.denominator().get_mpz_t());
  return q.get_si();
}

void enumerate(int rk, int rd, const Rational& mu, Bidegree min_part, std::vector<Bidegree>* cur,
               std::vector<Collection>* out) {
  if (rk == 0) {
    if (rd == 0) {
      Collection c;
      c.parts = *cur;
      std::sort(c.parts.begin(), c.parts.end(), slope_less);
      out->push_back(std::move(c));
    }
    return;
  }
  // Parts are generated in lexicographic (k, d) order so each multiset shows up once.
  for (int ki = min_part.first; ki <= rk; ++ki) {
    long hi = floor_mul(mu, ki);
    // the remaining parts carry at most mu (rk - ki)
    long lo = rd - floor_mul(mu, rk - ki);
    if (ki == min_part.first) lo = std::max<long>(lo, min_part.second);
    if (rk - ki == 0) lo = std::max<long>(lo, rd), hi = std::min<long>(hi, rd);
    for (long di = lo; di <= hi; ++di) {
      cur->push_back({ki, static_cast<int>(di)});
      enumerate(rk - ki, rd - static_cast<int>(di), mu, {ki, static_cast<int>(di)}, cur, out);
      cur->pop_back();
    }
  }
}

int rational_rank(std::vector<std::map<Monomial, Rational>> rows) {
  int rank = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) continue;
    ++rank;
    auto [pm_, pv] = *rows[r].begin();
    Monomial pivot = pm_;
    Rational pval = pv;
    for (std::size_t t = r + 1; t < rows.size(); ++t) {
      auto it = rows[t].find(pivot);
      if (it == rows[t].end()) continue;
      Rational f = it->second / pval;
      for (const auto& [m, c] : rows[r]) {
        Rational& x = rows[t][m];
        x -= f * c;
        if (x.is_zero()) rows[t].erase(m);
      }
    }
  }
  return rank;
}

int symbolic_rank(std::vector<std::map<Monomial, ParamScalar>> rows) {
  int rank = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) continue;
    ++rank;
    Monomial pivot = rows[r].begin()->first;
    ParamScalar pval = rows[r].begin()->second;
    for (std::size_t t = r + 1; t < rows.size(); ++t) {
      auto it = rows[t].find(pivot);
      if (it == rows[t].end()) continue;
      ParamScalar f = it->second / pval;
      for (const auto& [m, c] : rows[r]) {
        ParamScalar& x = rows[t][m];
        x -= f * c;
        if (x.is_zero()) rows[t].erase(m);
      }
    }
  }
  return rank;
}

}  // namespace

CheckLine verify_relation0(Bidegree p1, Bidegree p2) {
  std::string id = "relation0" + bideg(p1) + bideg(p2);
  if (long(p1.first) * p2.second != long(p2.first) * p1.second) return {id, false, "points are not collinear"};
  ShuffleElement c = commutator(build_P(p1.first, p1.second), build_P(p2.first, p2.second));
  if (c.is_zero()) return {id, true, "commutator vanishes"};
  return {id, false, "commutator numerator has " + std::to_string(c.num().size()) + " terms"};
}

CheckLine verify_relation(const LatticeTriangle& t) {
  TriangleClass cls = classify_triangle(t);
  std::string id = std::string("relation") + t.str();
  if (cls == TriangleClass::kNeither) return {id, false, "triangle is neither empty nor quasi-empty"};
  const int k = t.k(), d = t.d(), n = gcd_abs(k, d);
  ShuffleElement lhs = alpha(1) * commutator(build_P(t.k1, t.d1), build_P(t.k2, t.d2));
  ShuffleElement rhs = build_theta_Q(k / n, d / n, n).theta[n - 1];
  std::string kind = to_string(cls);
  if (lhs == rhs) return {id, true, kind + ", equals theta" + bideg({k, d})};
  return {id, false, kind + ", " + mismatch(lhs, rhs)};
}

std::vector<Collection> enumerate_collections(int k, int d, const Rational& mu) {
  std::vector<Collection> out;
  if (k < 0) throw Error("enumerate_collections: k must be nonnegative");
  std::vector<Bidegree> cur;
  if (k == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  enumerate(k, d, mu, {1, std::numeric_limits<int>::min()}, &cur, &out);
  std::sort(out.begin(), out.end(), [](const Collection& a, const Collection& b) { return a.parts < b.parts; });
  return out;
}

long count_collections(int k, int d, const Rational& mu) { return static_cast<long>(enumerate_collections(k, d, mu).size()); }

ShuffleElement collection_product(const Collection& c) {
  if (c.parts.empty()) throw Error("collection_product: empty collection");
  ShuffleElement p = build_P(c.parts[0].first, c.parts[0].second);
  for (std::size_t i = 1; i < c.parts.size(); ++i) p = shuffle_mul(p, build_P(c.parts[i].first, c.parts[i].second));
  return p;
}

int element_rank(const std::vector<ShuffleElement>& elems) {
  if (elems.empty()) return 0;
  const Rational s(7, 3), q2(11, 5);
  std::vector<std::map<Monomial, Rational>> rows;
  for (const auto& e : elems) {
    std::map<Monomial, Rational> row;
    LaurentPoly v = e.num().specialize_params(s, q2);
    for (const auto& t : v.terms()) row.emplace(t.mono, t.coeff);
    rows.push_back(std::move(row));
  }
  int r = rational_rank(rows);
  if (r == static_cast<int>(elems.size())) return r;
  std::vector<std::map<Monomial, ParamScalar>> srows;
  for (const auto& e : elems) {
    std::map<Monomial, std::vector<Term>> by_z;
    for (const auto& t : e.num().terms()) by_z[t.mono.z_part()].push_back({t.mono.param_part(), t.coeff});
    std::map<Monomial, ParamScalar> row;
    for (auto& [z, ts] : by_z) row.emplace(z, ParamScalar(LaurentPoly::from_terms(0, std::move(ts))));
    srows.push_back(std::move(row));
  }
  return symbolic_rank(std::move(srows));
}

int basis_rank(int k, int d, const Rational& mu, int max_k) {
  if (k > max_k) throw ResourceLimit("basis_rank: k above the configured guard");
  std::vector<ShuffleElement> elems;
  for (const auto& c : enumerate_collections(k, d, mu)) elems.push_back(collection_product(c));
  return element_rank(elems);
}

Report hall_suite(int max_k, int max_d) {
  Report rep;
  for (int k1 = 1; k1 <= max_k; ++k1)
    for (int k2 = k1; k1 + k2 <= max_k; ++k2)
      for (int d1 = -max_d; d1 <= max_d; ++d1)
        for (int d2 = -max_d; d2 <= max_d; ++d2)
          if (long(k1) * d2 == long(k2) * d1) rep.add(verify_relation0({k1, d1}, {k2, d2}));
  for (int k1 = 1; k1 < max_k; ++k1)
    for (int k2 = 1; k1 + k2 <= max_k; ++k2)
      for (int d1 = -max_d; d1 <= max_d; ++d1)
        for (int d2 = -max_d; d2 <= max_d; ++d2) {
          LatticeTriangle t{k1, d1, k2, d2};
          if (classify_triangle(t) != TriangleClass::kNeither) rep.add(verify_relation(t));
        }
  return rep;
}

}  // namespace shuffle
