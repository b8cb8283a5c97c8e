#include "shuffle/symmetrize.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <unordered_map>

#include <omp.h>

#include "shuffle/errors.hpp"

namespace shuffle {
namespace {

using Exps = std::array<int, kMaxZ>;

void check_block(const LaurentPoly& g, int first, int n) {
  if (first < 0 || n < 0 || first + n > g.var_count()) throw VarCountMismatch("symmetrize: block outside ring");
}

// Sort the block exponents of m decreasingly; returns the sign of the
// sorting permutation, or 0 when two exponents coincide.
int sort_block(Monomial* m, int first, int n) {
  Exps e{};
  for (int i = 0; i < n; ++i) e[i] = m->zexp(first + i);
  int sign = 1;
  for (int i = 1; i < n; ++i) {
    int v = e[i], j = i;
    while (j > 0 && e[j - 1] < v) {
      e[j] = e[j - 1];
      --j;
      sign = -sign;
    }
    if (j > 0 && e[j - 1] == v) return 0;
    e[j] = v;
  }
  for (int i = 0; i < n; ++i) m->set(Monomial::z_slot(first + i), e[i]);
  return sign;
}

Monomial block_zeroed(Monomial m, int first, int n) {
  for (int i = 0; i < n; ++i) m.set(Monomial::z_slot(first + i), 0);
  return m;
}

// Monomials of s_lambda(x_1..x_m) whose exponent vector is weakly
// decreasing, with their Kostka multiplicities.
struct KostkaTable {
  std::vector<std::pair<Exps, Rational>> entries;
};

class KostkaCache {
 public:
  const KostkaTable& get(const std::vector<int>& lambda) {
    auto it = memo_.find(lambda);
    if (it != memo_.end()) return it->second;
    KostkaTable t = build(lambda);
    return memo_.emplace(lambda, std::move(t)).first->second;
  }

 private:
  KostkaTable build(const std::vector<int>& lambda) {
    const int m = static_cast<int>(lambda.size());
    KostkaTable out;
    if (m == 0) {
      out.entries.push_back({Exps{}, Rational(1)});
      return out;
    }
    if (m == 1) {
      Exps e{};
      e[0] = lambda[0];
      out.entries.push_back({e, Rational(1)});
      return out;
    }
    const int total = std::accumulate(lambda.begin(), lambda.end(), 0);
    std::map<Exps, Rational> acc;
    std::vector<int> nu(m - 1);
    // Enumerate nu interlacing lambda: lambda[i+1] <= nu[i] <= lambda[i].
    auto rec = [&](auto&& self, int i, int partial) -> void {
      if (i == m - 1) {
        const int r = total - partial;
        const KostkaTable& sub = get(nu);
        for (const auto& [mu, k] : sub.entries) {
          if (m - 1 > 0 && mu[m - 2] < r) continue;
          Exps e = mu;
          e[m - 1] = r;
          acc[e] += k;
        }
        return;
      }
      for (int v = lambda[i + 1]; v <= lambda[i]; ++v) {
        nu[i] = v;
        self(self, i + 1, partial + v);
      }
    };
    rec(rec, 0, 0);
    out.entries.reserve(acc.size());
    for (auto& [e, k] : acc) out.entries.push_back({e, std::move(k)});
    return out;
  }

  std::map<std::vector<int>, KostkaTable> memo_;
};

// lambda = e - delta, normalized to a partition with last part 0.
std::vector<int> shape_of(Monomial m, int first, int n, int* shift) {
  std::vector<int> lambda(n);
  for (int i = 0; i < n; ++i) lambda[i] = m.zexp(first + i) - (n - 1 - i);
  *shift = n ? lambda[n - 1] : 0;
  for (int& v : lambda) v -= *shift;
  return lambda;
}

void append_distinct_permutations(std::vector<Term>* out, Monomial base, Exps mu, int first, int n,
                                  const Rational& c) {
  // mu is weakly decreasing; prev_permutation walks every distinct
  // rearrangement exactly once.
  do {
    Monomial m = base;
    for (int i = 0; i < n; ++i) m.set(Monomial::z_slot(first + i), mu[i]);
    out->push_back({m, c});
  } while (std::prev_permutation(mu.begin(), mu.begin() + n));
}

}  // namespace

Monomial staircase(int first, int n) {
  Monomial m;
  for (int i = 0; i < n; ++i) m.set(Monomial::z_slot(first + i), n - 1 - i);
  return m;
}

LaurentPoly vandermonde(int var_count, int first, int n) {
  LaurentPoly v = LaurentPoly::constant(1, var_count);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) v = v.times_linear(first + i, Monomial{}, first + j);
  return v;
}

LaurentPoly dominant_part_serial(const LaurentPoly& g, int first, int n) {
  check_block(g, first, n);
  std::vector<Term> out;
  for (const auto& t : g.terms()) {
    Monomial m = t.mono;
    int sign = sort_block(&m, first, n);
    if (sign != 0) out.push_back({m, sign > 0 ? t.coeff : -t.coeff});
  }
  return LaurentPoly::from_terms(g.var_count(), std::move(out));
}

LaurentPoly dominant_part(const LaurentPoly& g, int first, int n) {
  check_block(g, first, n);
  const auto& terms = g.terms();
  const std::ptrdiff_t size = static_cast<std::ptrdiff_t>(terms.size());
  std::vector<std::vector<Term>> parts(omp_get_max_threads());
#pragma omp parallel
  {
    std::vector<Term>& local = parts[omp_get_thread_num()];
#pragma omp for schedule(static)
    for (std::ptrdiff_t idx = 0; idx < size; ++idx) {
      Monomial m = terms[idx].mono;
      int sign = sort_block(&m, first, n);
      if (sign != 0) local.push_back({m, sign > 0 ? terms[idx].coeff : -terms[idx].coeff});
    }
  }
  std::vector<Term> all;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  all.reserve(total);
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(all));
  return LaurentPoly::from_terms(g.var_count(), std::move(all));
}

LaurentPoly dominant_product(const LaurentPoly& a, const LaurentPoly& b, int first, int n) {
  if (a.var_count() != b.var_count()) throw VarCountMismatch("dominant_product: rings differ");
  check_block(a, first, n);
  const LaurentPoly& outer = a.size() >= b.size() ? a : b;
  const LaurentPoly& inner = a.size() >= b.size() ? b : a;
  const auto& to = outer.terms();
  const auto& ti = inner.terms();
  std::vector<Rational> neg(ti.size());
  for (std::size_t j = 0; j < ti.size(); ++j) neg[j] = -ti[j].coeff;
  const std::ptrdiff_t size = static_cast<std::ptrdiff_t>(to.size());
  const int threads = omp_get_max_threads();
  std::vector<std::unordered_map<Monomial, Rational, MonomialHash>> maps(threads);
#pragma omp parallel
  {
    auto& local = maps[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < ti.size(); ++j) {
        Monomial m = to[i].mono + ti[j].mono;
        int sign = sort_block(&m, first, n);
        if (sign == 0) continue;
        local[m].add_product(to[i].coeff, sign > 0 ? ti[j].coeff : neg[j]);
      }
    }
  }
  std::vector<Term> all;
  for (auto& mp : maps)
    for (auto& [m, c] : mp)
      if (!c.is_zero()) all.push_back({m, std::move(c)});
  return LaurentPoly::from_terms(a.var_count(), std::move(all));
}

LaurentPoly schur_expand(const LaurentPoly& dom, int first, int n) {
  check_block(dom, first, n);
  const int k = dom.var_count();
  if (n <= 1 || dom.is_zero()) return dom;
  const auto& terms = dom.terms();

  // Kostka tables are filled serially; the accumulation below only reads.
  KostkaCache cache;
  std::vector<const KostkaTable*> table(terms.size());
  std::vector<int> shift(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (int a = 0; a + 1 < n; ++a)
      if (terms[i].mono.zexp(first + a) <= terms[i].mono.zexp(first + a + 1))
        throw Error("schur_expand: input is not in dominant form");
    table[i] = &cache.get(shape_of(terms[i].mono, first, n, &shift[i]));
  }

  // Coefficients of the monomial symmetric functions, keyed by the sorted
  // representative monomial.
  const std::ptrdiff_t size = static_cast<std::ptrdiff_t>(terms.size());
  const int threads = omp_get_max_threads();
  std::vector<std::unordered_map<Monomial, Rational, MonomialHash>> maps(threads);
#pragma omp parallel
  {
    auto& local = maps[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < size; ++i) {
      Monomial rest = block_zeroed(terms[i].mono, first, n);
      for (const auto& [mu, kk] : table[i]->entries) {
        Monomial m = rest;
        for (int a = 0; a < n; ++a) m.set(Monomial::z_slot(first + a), mu[a] + shift[i]);
        local[m].add_product(kk, terms[i].coeff);
      }
    }
  }
  for (int t = 1; t < threads; ++t) {
    for (auto& [m, c] : maps[t]) maps[0][m] += c;
    maps[t].clear();
  }
  std::vector<std::pair<Monomial, Rational>> sym;
  sym.reserve(maps[0].size());
  for (auto& [m, c] : maps[0])
    if (!c.is_zero()) sym.emplace_back(m, std::move(c));
  maps[0].clear();
  // Deterministic order before the parallel expansion.
  std::sort(sym.begin(), sym.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<std::vector<Term>> parts(threads);
  const std::ptrdiff_t ns = static_cast<std::ptrdiff_t>(sym.size());
#pragma omp parallel
  {
    auto& local = parts[omp_get_thread_num()];
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < ns; ++i) {
      Exps mu{};
      for (int a = 0; a < n; ++a) mu[a] = sym[i].first.zexp(first + a);
      append_distinct_permutations(&local, block_zeroed(sym[i].first, first, n), mu, first, n, sym[i].second);
    }
  }
  std::vector<Term> all;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  all.reserve(total);
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(all));
  return LaurentPoly::from_terms(k, std::move(all));
}

LaurentPoly alternant_quotient(const LaurentPoly& g, int first, int n) {
  return schur_expand(dominant_part(g, first, n), first, n);
}

LaurentPoly alternant_quotient_serial(const LaurentPoly& g, int first, int n) {
  check_block(g, first, n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Term> alt;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    for (const auto& t : g.terms()) {
      Monomial m = t.mono;
      for (int i = 0; i < n; ++i) m.set(Monomial::z_slot(first + perm[i]), t.mono.zexp(first + i));
      alt.push_back({m, inversions % 2 ? -t.coeff : t.coeff});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  LaurentPoly p = LaurentPoly::from_terms(g.var_count(), std::move(alt));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) p = divide_by_difference(p, first + i, first + j);
  return p;
}

}  // namespace shuffle
