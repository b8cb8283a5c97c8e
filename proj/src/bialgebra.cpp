#include "shuffle/bialgebra.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "shuffle/errors.hpp"
#include "shuffle/hall_geometry.hpp"
#include "shuffle/symmetrize.hpp"

namespace shuffle {
namespace {

const Monomial kQ = pm(2, 1);

// n alpha_n as a parameter polynomial
LaurentPoly n_alpha(int n) {
  LaurentPoly one = LaurentPoly::constant(1);
  return (LaurentPoly::param(2 * n, 0) - one) * (LaurentPoly::param(0, n) - one) * (LaurentPoly::param(-2 * n, -n) - one);
}

LaurentPoly power_sum(int n, int first, int count, int var_count) {
  LaurentPoly p(var_count);
  for (int i = first; i < first + count; ++i) p = p + LaurentPoly::z(i, var_count, n);
  return p;
}

void trim(HMonomial* h) {
  while (!h->empty() && h->back() == 0) h->pop_back();
}

HMonomial h_single(int n, int e = 1) {
  HMonomial h(n + 1, 0);
  h[n] = e;
  trim(&h);
  return h;
}

// coefficients of G(x) = 1 / ((1 - x/q1)(1 - x/q2)(1 - q x))
const std::vector<LaurentPoly>& g_series(int m_max) {
  static std::vector<LaurentPoly> g;
#pragma omp critical(shuffle_g_series)
  {
    for (int m = static_cast<int>(g.size()); m <= m_max; ++m) {
      std::vector<Term> ts;
      for (int i = 0; i <= m; ++i)
        for (int j = 0; i + j <= m; ++j) {
          int l = m - i - j;
          ts.push_back({pm(-2 * i + 2 * l, -j + l), Rational(1)});
        }
      g.push_back(LaurentPoly::from_terms(0, std::move(ts)));
    }
  }
  return g;
}

LaurentPoly relocate(const LaurentPoly& p, const std::vector<int>& slots, int var_count) {
  std::vector<Monomial> img;
  for (int s : slots) img.push_back(Monomial::z(s));
  return p.substitute(img, var_count);
}

std::vector<int> offsets(const std::vector<int>& ks) {
  std::vector<int> o(ks.size() + 1, 0);
  for (std::size_t f = 0; f < ks.size(); ++f) o[f + 1] = o[f] + ks[f];
  return o;
}

// Splits a joint numerator into pieces of fixed per-factor degree.
std::map<std::vector<int>, LaurentPoly> split_by_degrees(const LaurentPoly& joint, const std::vector<int>& ks) {
  std::vector<int> o = offsets(ks);
  std::map<std::vector<int>, std::vector<Term>> parts;
  for (const auto& t : joint.terms()) {
    std::vector<int> ds(ks.size());
    for (std::size_t f = 0; f < ks.size(); ++f) ds[f] = t.mono.z_degree(o[f], ks[f]) - ks[f] * (ks[f] - 1);
    parts[ds].push_back(t);
  }
  std::map<std::vector<int>, LaurentPoly> out;
  for (auto& [ds, ts] : parts) out.emplace(ds, LaurentPoly::from_terms(joint.var_count(), std::move(ts)));
  return out;
}

LaurentPoly keep_min_degree(const LaurentPoly& p, int first, int count, int min_deg) {
  std::vector<Term> ts;
  for (const auto& t : p.terms())
    if (t.mono.z_degree(first, count) >= min_deg) ts.push_back(t);
  return LaurentPoly::from_terms(p.var_count(), std::move(ts));
}

LaurentPoly keep_max_degree(const LaurentPoly& p, int first, int count, int max_deg) {
  std::vector<Term> ts;
  for (const auto& t : p.terms())
    if (t.mono.z_degree(first, count) <= max_deg) ts.push_back(t);
  return LaurentPoly::from_terms(p.var_count(), std::move(ts));
}

// Expansion of the block [o, o+m) of joint, split after i variables, in
// powers of z_a / z_b (a left, b right). Every cross pair contributes
// q^-1 z_b^-2 (1 - x) G(x), x = z_a / z_b, and every right variable
// h(z_b) = sum_n h_n z_b^-n. Only terms whose right block has raw z-degree
// >= min_raw are produced; they are exact.
std::vector<std::pair<HMonomial, LaurentPoly>> split_group(const LaurentPoly& joint, int o, int i, int r, int min_raw) {
  std::vector<std::pair<HMonomial, LaurentPoly>> out;
  if (joint.is_zero()) return out;
  const int vc = joint.var_count();
  if (r == 0) {
    if (min_raw <= 0) out.emplace_back(HMonomial{}, joint);
    return out;
  }
  Monomial shift = pm(-2 * i * r, -i * r);
  for (int b = o + i; b < o + i + r; ++b) shift.set(Monomial::z_slot(b), -2 * i);
  LaurentPoly base = joint.times_monomial(shift);
  const int top = base.max_degree(o + i, r);
  const int order = top - min_raw;
  if (order < 0) return out;

  LaurentPoly cross = LaurentPoly::constant(1, vc);
  if (i > 0) {
    const auto& g = g_series(order);
    for (int a = o; a < o + i; ++a)
      for (int b = o + i; b < o + i + r; ++b) {
        std::vector<Term> ts;
        for (int m = 0; m <= order; ++m) {
          LaurentPoly c = g[m] - (m > 0 ? g[m - 1] : LaurentPoly(0));
          Monomial zm = Monomial::z(a, m) + Monomial::z(b, -m);
          for (const auto& t : c.terms()) ts.push_back({t.mono + zm, t.coeff});
        }
        cross = keep_max_degree(cross * LaurentPoly::from_terms(vc, std::move(ts)), o, i, order);
      }
  }
  LaurentPoly body = keep_min_degree(base * cross, o + i, r, min_raw);

  // h-series over the right block, grouped by multiset of indices
  std::map<HMonomial, std::vector<Term>> hs;
  std::vector<int> n(r, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == r) {
      std::vector<int> sorted = n;
      std::sort(sorted.begin(), sorted.end());
      HMonomial h(sorted.back() + 1, 0);
      for (int v : sorted) ++h[v];
      trim(&h);
      Monomial m;
      for (int b = 0; b < r; ++b) m.set(Monomial::z_slot(o + i + b), -n[b]);
      hs[h].push_back({m, Rational(1)});
      return;
    }
    for (int v = 0; v <= left; ++v) {
      n[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, order);
  for (auto& [h, ts] : hs) {
    int deg = h_degree(h);
    LaurentPoly part = keep_min_degree(body, o + i, r, min_raw + deg);
    if (part.is_zero()) continue;
    LaurentPoly res = keep_min_degree(part * LaurentPoly::from_terms(vc, std::move(ts)), o + i, r, min_raw);
    if (!res.is_zero()) out.emplace_back(h, std::move(res));
  }
  return out;
}

// Delta on an h-monomial: h(w) -> h(w) (x) h(w).
std::map<std::pair<HMonomial, HMonomial>, Rational> delta_h(const HMonomial& h) {
  std::map<std::pair<HMonomial, HMonomial>, Rational> cur;
  HMonomial h0;
  if (!h.empty() && h[0] != 0) h0 = h_single(0, h[0]);
  cur[{h0, h0}] = 1;
  for (std::size_t n = 1; n < h.size(); ++n)
    for (int rep = 0; rep < h[n]; ++rep) {
      std::map<std::pair<HMonomial, HMonomial>, Rational> next;
      for (const auto& [pr, c] : cur)
        for (int m = 0; m <= static_cast<int>(n); ++m) {
          auto key = std::make_pair(h_mul(pr.first, h_single(m)), h_mul(pr.second, h_single(static_cast<int>(n) - m)));
          next[key] += c;
        }
      cur = std::move(next);
    }
  return cur;
}

// Moves h to the left of the payload of factor f: X h_n = sum_j h_{n-j} (X O_j).
std::vector<std::pair<HMonomial, LaurentPoly>> push_left(const HMonomial& h, const LaurentPoly& joint, int first,
                                                         int count) {
  std::vector<std::pair<HMonomial, LaurentPoly>> cur{{HMonomial{}, joint}};
  if (!h.empty() && h[0] != 0) cur[0].first = h_single(0, h[0]);
  const int vc = joint.var_count();
  for (std::size_t n = 1; n < h.size(); ++n)
    for (int rep = 0; rep < h[n]; ++rep) {
      std::map<HMonomial, LaurentPoly> next;
      for (const auto& [hh, j] : cur)
        for (int jj = 0; jj <= static_cast<int>(n); ++jj) {
          LaurentPoly o = jj == 0 ? LaurentPoly::constant(1, vc) : omega_product_coefficient(jj, first, count, vc);
          if (o.is_zero()) continue;
          HMonomial nh = h_mul(hh, h_single(static_cast<int>(n) - jj));
          auto it = next.find(nh);
          LaurentPoly add = j * o;
          if (it == next.end())
            next.emplace(nh, std::move(add));
          else
            it->second = it->second + add;
        }
      cur.assign(next.begin(), next.end());
    }
  return cur;
}

// ---- pairing kernel ----

// Per-group data for the normal-ordered integral of a joint numerator.
struct PairingShape {
  std::vector<int> ks;
  std::vector<int> group_end;  // one past the last variable of each variable's group
};

PairingShape make_shape(const std::vector<int>& ks) {
  PairingShape s;
  s.ks = ks;
  std::vector<int> o = offsets(ks);
  for (std::size_t f = 0; f < ks.size(); ++f)
    for (int v = o[f]; v < o[f + 1]; ++v) s.group_end.push_back(o[f + 1]);
  return s;
}

// Integrand polynomial u^n J(1/u) prod_groups [u^{2(m-1)} prod_{a<b}(u_a - u_b) u_b^{-3 pos(b)}]
// together with the scalar prod_groups (-1)^C(m,2) q^-C(m,2) / alpha_1^m.
LaurentPoly integrand(const LaurentPoly& joint, const std::vector<int>& ks, const std::vector<std::vector<int>>& words,
                      ParamScalar* scalar) {
  const int vc = joint.var_count();
  std::vector<Monomial> inv;
  for (int i = 0; i < vc; ++i) inv.push_back(Monomial::z(i, -1));
  LaurentPoly f = joint.substitute(inv, vc);
  std::vector<int> o = offsets(ks);
  Monomial shift;
  ParamScalar c = 1;
  for (std::size_t g = 0; g < ks.size(); ++g) {
    const int m = ks[g];
    for (int p = 0; p < m; ++p) {
      int v = o[g] + p;
      int wv = words[g][p];
      shift.set(Monomial::z_slot(v), wv + 2 * (m - 1) - 3 * p);
    }
    for (int a = o[g]; a < o[g + 1]; ++a)
      for (int b = a + 1; b < o[g + 1]; ++b) f = f.times_linear(a, Monomial{}, b);
    const int pairs = m * (m - 1) / 2;
    ParamScalar gs = ParamScalar::monomial(-2 * pairs, -pairs, pairs % 2 ? Rational(-1) : Rational(1));
    c *= gs / alpha(1).pow(m);
  }
  *scalar = c;
  return f.times_monomial(shift);
}

// Constant term of u^e prod_{a<b same group} G(u_a / u_b).
LaurentPoly ct_weight(std::vector<int>& e, int a, const PairingShape& s, const std::vector<LaurentPoly>& g) {
  const int vc = static_cast<int>(e.size());
  if (a == vc) return LaurentPoly::constant(1);
  const int need = -e[a];
  const int partners = s.group_end[a] - a - 1;
  if (partners == 0) return need == 0 ? ct_weight(e, a + 1, s, g) : LaurentPoly(0);
  if (need < 0) return LaurentPoly(0);
  LaurentPoly total(0);
  std::vector<int> m(partners, 0);
  auto rec = [&](auto&& self, int pos, int left, const LaurentPoly& coeff) -> void {
    if (pos == partners - 1) {
      m[pos] = left;
      e[a + 1 + pos] -= left;
      LaurentPoly c = coeff * g[left];
      LaurentPoly w = ct_weight(e, a + 1, s, g);
      if (!w.is_zero()) total = total + c * w;
      e[a + 1 + pos] += left;
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[a + 1 + pos] -= v;
      self(self, pos + 1, left - v, coeff * g[v]);
      e[a + 1 + pos] += v;
    }
  };
  rec(rec, 0, need, LaurentPoly::constant(1));
  return total;
}

std::vector<std::pair<std::vector<int>, LaurentPoly>> group_by_z(const LaurentPoly& f) {
  std::map<Monomial, std::vector<Term>> by_z;
  for (const auto& t : f.terms()) by_z[t.mono.z_part()].push_back({t.mono.param_part(), t.coeff});
  std::vector<std::pair<std::vector<int>, LaurentPoly>> out;
  for (auto& [zm, ts] : by_z) {
    std::vector<int> e(f.var_count());
    for (int i = 0; i < f.var_count(); ++i) e[i] = zm.zexp(i);
    out.emplace_back(std::move(e), LaurentPoly::from_terms(0, std::move(ts)));
  }
  return out;
}

ParamScalar ct_pairing(const LaurentPoly& joint, const LaurentPoly& den, const std::vector<int>& ks,
                       const std::vector<std::vector<int>>& words) {
  ParamScalar scalar;
  LaurentPoly f = integrand(joint, ks, words, &scalar);
  PairingShape shape = make_shape(ks);
  auto groups = group_by_z(f);
  int bound = 0;
  for (const auto& [e, c] : groups) {
    int s = 0;
    for (int v : e) s += std::abs(v);
    bound = std::max(bound, s * std::max(1, static_cast<int>(e.size())));
  }
  const auto& g = g_series(bound);
  std::vector<LaurentPoly> parts(groups.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t idx = 0; idx < groups.size(); ++idx) {
    std::vector<int> e = groups[idx].first;
    LaurentPoly w = ct_weight(e, 0, shape, g);
    if (!w.is_zero()) parts[idx] = groups[idx].second * w;
  }
  LaurentPoly total(0);
  for (const auto& p : parts)
    if (p.var_count() == 0 && !p.is_zero()) total = total + p;
  return scalar * ParamScalar(total, den);
}

// Reference: truncates every geometric series by the weight bound, forms
// the full product and reads off the constant term.
ParamScalar ct_pairing_serial(const LaurentPoly& joint, const LaurentPoly& den, const std::vector<int>& ks,
                              const std::vector<std::vector<int>>& words) {
  ParamScalar scalar;
  LaurentPoly f = integrand(joint, ks, words, &scalar);
  const int vc = f.var_count();
  std::vector<int> o = offsets(ks);
  // weight of u_v is its position inside the group; (u_a / u_b)^m lowers it by m (b - a)
  auto weight = [&](Monomial m) {
    int w = 0;
    for (std::size_t gi = 0; gi < ks.size(); ++gi)
      for (int p = 0; p < ks[gi]; ++p) w += p * m.zexp(o[gi] + p);
    return w;
  };
  int w_max = 0;
  for (const auto& t : f.terms()) w_max = std::max(w_max, weight(t.mono));
  const auto& g = g_series(w_max);
  LaurentPoly series = LaurentPoly::constant(1, vc);
  for (std::size_t gi = 0; gi < ks.size(); ++gi)
    for (int a = o[gi]; a < o[gi + 1]; ++a)
      for (int b = a + 1; b < o[gi + 1]; ++b) {
        std::vector<Term> ts;
        for (int m = 0; m * (b - a) <= w_max; ++m) {
          Monomial zm = Monomial::z(a, m) + Monomial::z(b, -m);
          for (const auto& t : g[m].terms()) ts.push_back({t.mono + zm, t.coeff});
        }
        LaurentPoly prod = series * LaurentPoly::from_terms(vc, std::move(ts));
        std::vector<Term> kept;
        for (const auto& t : prod.terms())
          if (-weight(t.mono) <= w_max) kept.push_back(t);
        series = LaurentPoly::from_terms(vc, std::move(kept));
      }
  LaurentPoly full = f * series;
  std::vector<Term> ct;
  for (const auto& t : full.terms())
    if (t.mono.z_part() == Monomial{}) ct.push_back(t);
  return scalar * ParamScalar(LaurentPoly::from_terms(0, std::move(ct)), den);
}

ShuffleElement unit_element() { return ShuffleElement::from_parts(0, LaurentPoly::constant(1, 0)); }

ShuffleElement mul(const ShuffleElement& a, const ShuffleElement& b) {
  if (a.k() == 0) return ParamScalar(a.num(), a.den()) * b;
  if (b.k() == 0) return ParamScalar(b.num(), b.den()) * a;
  return shuffle_mul(a, b);
}

}  // namespace

// ---- Omega series ----

std::vector<ParamScalar> omega_big_series(int order) {
  if (order < 0) throw Error("omega_big_series: negative order");
  std::vector<LaurentPoly> c{LaurentPoly::constant(1)};
  for (int j = 1; j <= order; ++j) {
    LaurentPoly acc(0);
    for (int n = 1; n <= j; ++n) acc = acc - n_alpha(n) * c[j - n];
    c.push_back(acc * Rational(1, j));
  }
  std::vector<ParamScalar> out;
  for (auto& p : c) out.emplace_back(p);
  return out;
}

std::vector<ParamScalar> omega_rational_series(int order) {
  if (order < 0) throw Error("omega_rational_series: negative order");
  auto lin = [](int s, int q2) {  // 1 - s^. q2^. y as coefficients in y
    return std::vector<LaurentPoly>{LaurentPoly::constant(1), -LaurentPoly::param(s, q2)};
  };
  auto poly_mul = [](const std::vector<LaurentPoly>& a, const std::vector<LaurentPoly>& b) {
    std::vector<LaurentPoly> r(a.size() + b.size() - 1, LaurentPoly(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
  };
  std::vector<LaurentPoly> num = poly_mul(poly_mul(lin(-2, -1), lin(2, 0)), lin(0, 1));
  std::vector<LaurentPoly> den = poly_mul(poly_mul(lin(2, 1), lin(-2, 0)), lin(0, -1));
  std::vector<LaurentPoly> c;
  for (int j = 0; j <= order; ++j) {
    LaurentPoly v = j < static_cast<int>(num.size()) ? num[j] : LaurentPoly(0);
    for (int i = 1; i <= j && i < static_cast<int>(den.size()); ++i) v = v - den[i] * c[j - i];
    c.push_back(v);
  }
  std::vector<ParamScalar> out;
  for (auto& p : c) out.emplace_back(p);
  return out;
}

LaurentPoly omega_product_coefficient(int j, int first, int count, int var_count) {
  if (j < 0) throw Error("omega_product_coefficient: negative index");
  std::vector<LaurentPoly> c{LaurentPoly::constant(1, var_count)};
  for (int t = 1; t <= j; ++t) {
    LaurentPoly acc(var_count);
    for (int n = 1; n <= t; ++n)
      acc = acc - lift(n_alpha(n), var_count) * power_sum(n, first, count, var_count) * c[t - n];
    c.push_back(acc * Rational(1, t));
  }
  return c[j];
}

// ---- h-monomials ----

HMonomial h_mul(const HMonomial& a, const HMonomial& b) {
  HMonomial r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(&r);
  return r;
}

int h_degree(const HMonomial& h) {
  int d = 0;
  for (std::size_t n = 1; n < h.size(); ++n) d += static_cast<int>(n) * h[n];
  return d;
}

bool h_is_h0_power(const HMonomial& h) { return h.size() <= 1; }

std::string h_str(const HMonomial& h) {
  std::string s;
  for (std::size_t n = 0; n < h.size(); ++n) {
    if (h[n] == 0) continue;
    if (!s.empty()) s += " ";
    s += "h" + std::to_string(n);
    if (h[n] != 1) s += "^" + std::to_string(h[n]);
  }
  return s.empty() ? "1" : s;
}

std::string HKey::str() const {
  std::string s;
  for (std::size_t f = 0; f < ks.size(); ++f) {
    if (f) s += " (x) ";
    s += h_str(h[f]) + " [" + std::to_string(ks[f]) + "," + std::to_string(ds[f]) + "]";
  }
  return s;
}

// ---- HSeriesElement ----

HSeriesElement HSeriesElement::from_element(const ShuffleElement& p, const HMonomial& h, int window) {
  HSeriesElement x(1, window);
  if (!p.is_zero()) x.add({{h}, {p.k()}, {p.d()}}, p.num(), p.den());
  return x;
}

void HSeriesElement::add(const HKey& key, const LaurentPoly& joint, const LaurentPoly& den) {
  if (joint.is_zero()) return;
  if (static_cast<int>(key.ks.size()) != factors_) throw Error("HSeriesElement: factor count mismatch");
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, HPayload{joint, den});
    return;
  }
  HPayload& p = it->second;
  const int vc = joint.var_count();
  if (p.den == den) {
    p.joint = p.joint + joint;
  } else {
    p.joint = p.joint * lift(den, vc) + joint * lift(p.den, vc);
    p.den = p.den * den;
  }
  if (p.joint.is_zero()) terms_.erase(it);
}

HSeriesElement HSeriesElement::filtered(const std::function<bool(const HKey&)>& keep) const {
  HSeriesElement r(factors_, window_);
  for (const auto& [k, p] : terms_)
    if (keep(k)) r.terms_.emplace(k, p);
  return r;
}

HSeriesElement operator+(const HSeriesElement& a, const HSeriesElement& b) {
  if (a.factors_ != b.factors_) throw Error("HSeriesElement: factor count mismatch");
  HSeriesElement r = a;
  r.window_ = std::max(a.window_, b.window_);
  for (const auto& [k, p] : b.terms_) r.add(k, p.joint, p.den);
  return r;
}

HSeriesElement operator*(const ParamScalar& c, const HSeriesElement& a) {
  HSeriesElement r(a.factors_, a.window_);
  if (c.is_zero()) return r;
  for (const auto& [k, p] : a.terms_)
    r.add(k, p.joint * lift(c.num(), p.joint.var_count()), p.den * c.den());
  return r;
}

HSeriesElement operator-(const HSeriesElement& a, const HSeriesElement& b) { return a + ParamScalar(-1) * b; }

bool operator==(const HSeriesElement& a, const HSeriesElement& b) {
  if (a.factors_ != b.factors_ || a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [k, p] : a.terms_) {
    auto it = b.terms_.find(k);
    if (it == b.terms_.end()) return false;
    const int vc = p.joint.var_count();
    if (p.joint * lift(it->second.den, vc) != it->second.joint * lift(p.den, vc)) return false;
  }
  return true;
}

std::string HSeriesElement::str() const {
  std::ostringstream out;
  for (const auto& [k, p] : terms_) out << k.str() << "\n" << p.joint.str() << "\n" << p.den.str() << "\n";
  return out.str();
}

// ---- normal ordering and products ----

HSeriesElement normal_order(const HMonomial& h, const ShuffleElement& p, int window) {
  if (static_cast<int>(h.size()) - 1 > window) throw WindowExceeded("normal_order: h index above the window");
  HSeriesElement out(1, window);
  if (p.is_zero()) return out;
  for (auto& [hh, j] : push_left(h, p.num(), 0, p.k()))
    for (auto& [ds, part] : split_by_degrees(j, {p.k()})) out.add({{hh}, {p.k()}, ds}, part, p.den());
  return out;
}

HSeriesElement hseries_mul(const HSeriesElement& a, const HSeriesElement& b) {
  if (a.factors() != b.factors()) throw Error("hseries_mul: factor count mismatch");
  const int nf = a.factors();
  HSeriesElement out(nf, std::max(a.window(), b.window()));
  for (const auto& [ka, pa] : a.terms())
    for (const auto& [kb, pb] : b.terms()) {
      std::vector<int> ks(nf);
      for (int f = 0; f < nf; ++f) ks[f] = ka.ks[f] + kb.ks[f];
      const int vc = std::accumulate(ks.begin(), ks.end(), 0);
      if (vc > kMaxZ) throw ResourceLimit("hseries_mul: product exceeds the supported variable count");
      std::vector<int> oa = offsets(ka.ks), on = offsets(ks);
      // normal-order the a payload past the h's of b, factor by factor
      std::vector<std::pair<std::vector<HMonomial>, LaurentPoly>> cur{{ka.h, pa.joint}};
      for (int f = 0; f < nf; ++f) {
        if (kb.h[f].empty()) continue;
        std::vector<std::pair<std::vector<HMonomial>, LaurentPoly>> next;
        for (auto& [hs, j] : cur)
          for (auto& [hh, jj] : push_left(kb.h[f], j, oa[f], ka.ks[f])) {
            auto nh = hs;
            nh[f] = h_mul(nh[f], hh);
            next.emplace_back(std::move(nh), std::move(jj));
          }
        cur = std::move(next);
      }
      std::vector<int> sa, sb;
      for (int f = 0; f < nf; ++f) {
        for (int v = 0; v < ka.ks[f]; ++v) sa.push_back(on[f] + v);
        for (int v = 0; v < kb.ks[f]; ++v) sb.push_back(on[f] + ka.ks[f] + v);
      }
      LaurentPoly jb = relocate(pb.joint, sb, vc);
      for (auto& [hs, j] : cur) {
        LaurentPoly joint = relocate(j, sa, vc) * jb;
        for (int f = 0; f < nf; ++f)
          if (ka.ks[f] > 0 && kb.ks[f] > 0) joint = shuffle_blocks(joint, on[f], ka.ks[f], kb.ks[f]);
        HKey key{hs, ks, {}};
        for (auto& [ds, part] : split_by_degrees(joint, ks)) {
          key.ds = ds;
          out.add(key, part, pa.den * pb.den);
        }
      }
    }
  return out;
}

HSeriesElement hecke_commutator(int n, const ShuffleElement& p, int window) {
  if (n < 1) throw Error("hecke_commutator: n must be positive");
  if (n > window) throw WindowExceeded("hecke_commutator: n above the window");
  // log(1 + sum_m h_m h_0^-1 w^-m), coefficient of w^-n
  using HPoly = std::map<HMonomial, Rational>;
  auto poly_mul = [n](const HPoly& x, const HPoly& y) {
    HPoly r;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y) {
        HMonomial m = h_mul(a, b);
        if (h_degree(m) <= n) r[m] += ca * cb;
      }
    return r;
  };
  HPoly t;
  for (int m = 1; m <= n; ++m) t[h_mul(h_single(m), h_single(0, -1))] = 1;
  HPoly power = t, log;
  for (int j = 1; j <= n; ++j) {
    Rational c(j % 2 ? 1 : -1, j);
    for (const auto& [m, v] : power)
      if (h_degree(m) == n) log[m] += c * v;
    power = poly_mul(power, t);
  }
  HSeriesElement out(1, window);
  for (const auto& [m, c] : log) {
    if (c.is_zero()) continue;
    HSeriesElement left = HSeriesElement::from_element(p, m, window);
    out = out + ParamScalar(c) * (left - normal_order(m, p, window));
  }
  return alpha(n).inverse() * out;
}

// ---- coproducts ----

std::vector<std::optional<TensorElement>> delta_mu(const ShuffleElement& p, const Rational& mu) {
  if (!has_slope_at_most(p, mu)) throw SlopeExceeded("delta_mu: element has slope above mu");
  std::vector<std::optional<TensorElement>> out;
  for (int i = 0; i <= p.k(); ++i) out.push_back(scaling_limit(p, i, mu));
  return out;
}

int delta_top_degree(const ShuffleElement& p, int k2) {
  const int k = p.k(), i = k - k2;
  if (k2 < 0 || k2 > k) throw Error("delta_top_degree: split out of range");
  if (k2 == 0 || p.is_zero()) return 0;
  return p.num().max_degree(i, k2) - 2 * i * k2 - k2 * (k2 - 1);
}

HSeriesElement delta_expand(const ShuffleElement& p, const std::function<int(int)>& min_d2, int window) {
  HSeriesElement out(2, window);
  if (p.is_zero()) return out;
  const int k = p.k();
  for (int i = 0; i <= k; ++i) {
    const int r = k - i;
    const int min_raw = min_d2(r) + r * (r - 1);
    for (auto& [h, poly] : split_group(p.num(), 0, i, r, min_raw))
      for (auto& [ds, part] : split_by_degrees(poly, {i, r})) out.add({{h, {}}, {i, r}, ds}, part, p.den());
  }
  return out;
}

HSeriesElement delta_truncated(const ShuffleElement& p, int window) {
  if (window < 0) throw WindowExceeded("delta_truncated: negative window");
  const int k = p.k(), d = p.d();
  return delta_expand(p, [&](int r) { return k == 0 ? -window : floor_div(d * r, k) - window; }, window);
}

HSeriesElement apply_delta(const HSeriesElement& x, int f, const std::function<int(const HKey&, int)>& min_right) {
  const int nf = x.factors();
  if (f < 0 || f >= nf) throw Error("apply_delta: factor out of range");
  HSeriesElement out(nf + 1, x.window());
  for (const auto& [key, pay] : x.terms()) {
    std::vector<int> o = offsets(key.ks);
    const int m = key.ks[f];
    auto hsplit = delta_h(key.h[f]);
    for (int i = 0; i <= m; ++i) {
      const int r = m - i;
      std::vector<int> ks = key.ks;
      ks[f] = r;
      ks.insert(ks.begin() + f, i);
      const int bound = min_right(key, r);
      for (const auto& [hp, c] : hsplit) {
        const int min_raw = bound - h_degree(hp.second) + r * (r - 1);
        for (auto& [hh, poly] : split_group(pay.joint, o[f], i, r, min_raw)) {
          std::vector<HMonomial> hs = key.h;
          hs[f] = hp.second;
          hs.insert(hs.begin() + f, h_mul(hp.first, hh));
          LaurentPoly scaled = poly * c;
          for (auto& [ds, part] : split_by_degrees(scaled, ks)) out.add({hs, ks, ds}, part, pay.den);
        }
      }
    }
  }
  return out;
}

HSeriesElement truncate_tail(const HSeriesElement& x, int k, int d, int window) {
  return x.filtered([&](const HKey& key) {
    int kt = 0, dt = 0;
    for (int f = static_cast<int>(key.ks.size()) - 1; f >= 1; --f) {
      kt += key.ks[f];
      dt += key.degree(f);
      if (dt < (k == 0 ? 0 : floor_div(d * kt, k)) - window) return false;
    }
    return true;
  });
}

// ---- pairing ----

namespace {

ParamScalar pair_impl(const WordExpression& w, const ShuffleElement& p, bool serial) {
  ParamScalar total = 0;
  for (const auto& [word, c] : w.terms()) {
    if (static_cast<int>(word.size()) != p.k() || p.is_zero()) continue;
    int deg = std::accumulate(word.begin(), word.end(), 0);
    if (deg != p.d()) continue;
    if (p.k() == 0) {
      total += c * ParamScalar(p.num(), p.den());
      continue;
    }
    ParamScalar v = serial ? ct_pairing_serial(p.num(), p.den(), {p.k()}, {word})
                           : ct_pairing(p.num(), p.den(), {p.k()}, {word});
    total += c * v;
  }
  return total;
}

}  // namespace

ParamScalar pair_word_element(const WordExpression& w, const ShuffleElement& p) { return pair_impl(w, p, false); }
ParamScalar pair_word_element_serial(const WordExpression& w, const ShuffleElement& p) {
  return pair_impl(w, p, true);
}

ParamScalar pair_words_tensor(const std::vector<WordExpression>& words, const HSeriesElement& x) {
  if (static_cast<int>(words.size()) != x.factors()) throw Error("pair_words_tensor: factor count mismatch");
  std::vector<int> wk(words.size()), wd(words.size());
  for (std::size_t f = 0; f < words.size(); ++f)
    if (!words[f].homogeneous(&wk[f], &wd[f])) throw Error("pair_words_tensor: inhomogeneous word expression");
  ParamScalar total = 0;
  for (const auto& [key, pay] : x.terms()) {
    bool match = true;
    for (std::size_t f = 0; f < words.size(); ++f)
      match = match && h_is_h0_power(key.h[f]) && key.ks[f] == wk[f] && key.ds[f] == wd[f];
    if (!match) continue;
    // every combination of words, one per factor
    std::vector<std::pair<std::vector<std::vector<int>>, ParamScalar>> combos{{{}, ParamScalar(1)}};
    for (const auto& w : words) {
      std::vector<std::pair<std::vector<std::vector<int>>, ParamScalar>> next;
      for (const auto& [ws, c] : combos)
        for (const auto& [word, cw] : w.terms()) {
          auto nw = ws;
          nw.push_back(word);
          next.emplace_back(std::move(nw), c * cw);
        }
      combos = std::move(next);
    }
    for (const auto& [ws, c] : combos) total += c * ct_pairing(pay.joint, pay.den, key.ks, ws);
  }
  return total;
}

WordExpression collection_word(const Collection& c) {
  if (c.parts.empty()) return WordExpression::word({});
  WordExpression w = build_P_recursive(c.parts[0].first, c.parts[0].second).word;
  for (std::size_t i = 1; i < c.parts.size(); ++i) w = w * build_P_recursive(c.parts[i].first, c.parts[i].second).word;
  return w;
}

ParamScalar ortho_value(const Collection& c) {
  ParamScalar v = 1;
  for (const auto& [k, d] : c.parts) v *= alpha(gcd_abs(k, d)).inverse();
  return v;
}

ParamScalar hopf_ortho_value(const Collection& c) {
  ParamScalar v = ortho_value(c);
  for (std::size_t i = 0, run = 1; i < c.parts.size(); ++i) {
    run = (i > 0 && c.parts[i] == c.parts[i - 1]) ? run + 1 : 1;
    v *= ParamScalar(static_cast<long>(run));
    if (c.parts[i].first % 2 == 0) v = -v;
  }
  return v;
}

GramMatrix gram_matrix(const std::vector<Collection>& cs, GramConvention conv) {
  GramMatrix g;
  g.collections = cs;
  if (conv == GramConvention::kHopf)
    for (auto& c : g.collections) std::reverse(c.parts.begin(), c.parts.end());
  std::vector<WordExpression> words;
  std::vector<ShuffleElement> elems;
  for (const auto& c : g.collections) {
    words.push_back(collection_word(c));
    elems.push_back(collection_product(c));
  }
  g.entries.assign(cs.size(), std::vector<ParamScalar>(cs.size()));
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) g.entries[i][j] = pair_word_element(words[i], elems[j]);
  return g;
}

Report gram_check(const std::vector<Collection>& cs, GramConvention conv) {
  Report rep;
  GramMatrix g = gram_matrix(cs, conv);
  const std::string tag = conv == GramConvention::kStated ? "gram " : "gram-hopf ";
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) {
      std::string id = tag + g.collections[i].str() + " " + g.collections[j].str();
      const ParamScalar& v = g.entries[i][j];
      if (i == j) {
        ParamScalar want = conv == GramConvention::kStated ? ortho_value(cs[i]) : hopf_ortho_value(cs[i]);
        rep.add(id, v == want, v == want ? "diagonal " + v.str() : "got " + v.str() + ", expected " + want.str());
      } else {
        rep.add(id, v.is_zero() && v == g.entries[j][i], v.is_zero() ? "orthogonal" : "got " + v.str());
      }
    }
  return rep;
}

// ---- suites ----

namespace {

std::vector<std::vector<int>> all_words(int len, int lo, int hi) {
  std::vector<std::vector<int>> out{{}};
  for (int p = 0; p < len; ++p) {
    std::vector<std::vector<int>> next;
    for (const auto& w : out)
      for (int v = lo; v <= hi; ++v) {
        auto nw = w;
        nw.push_back(v);
        next.push_back(std::move(nw));
      }
    out = std::move(next);
  }
  return out;
}

std::string word_str(const std::vector<int>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

int sum(const std::vector<int>& w) { return std::accumulate(w.begin(), w.end(), 0); }

ShuffleElement word_elem(const std::vector<int>& w) { return word_to_element(WordExpression::word(w)); }

std::string bideg(int k, int d) { return "(" + std::to_string(k) + "," + std::to_string(d) + ")"; }

HSeriesElement tensor_to_hseries(const TensorElement& t) {
  HSeriesElement x(2);
  if (t.is_zero()) return x;
  for (auto& [ds, part] : split_by_degrees(t.joint_num, {t.left_k, t.right_k}))
    x.add({{h_single(0, t.h0_pow), {}}, {t.left_k, t.right_k}, ds}, part, t.den);
  return x;
}

ShuffleElement q_element(int k, int d) {
  if (k == 0) return unit_element();
  const int n = gcd_abs(k, d);
  return build_theta_Q(k / n, d / n, n).Q[n - 1];
}

}  // namespace

Report pairing_suite() {
  Report rep;
  for (int d = -3; d <= 3; ++d) {
    ParamScalar v = pair_word_element(WordExpression::word({d}), build_P(1, d));
    rep.add("pair word" + word_str({d}) + " z^" + std::to_string(d), v == alpha(1).inverse(), v.str());
    ParamScalar z = pair_word_element(WordExpression::word({d}), build_P(1, d + 1));
    rep.add("pair word" + word_str({d}) + " z^" + std::to_string(d + 1), z.is_zero(), z.str());
  }
  {
    auto rp = build_P_recursive(2, 1);
    ParamScalar v = pair_word_element(rp.word, rp.element);
    rep.add("pair P(2,1) P(2,1)", v == alpha(1).inverse(), v.str());
  }
  // symmetry on word pairs
  for (int k = 1; k <= 3; ++k) {
    auto ws = all_words(k, -1, 1);
    std::vector<ShuffleElement> es;
    for (const auto& w : ws) es.push_back(word_elem(w));
    int checked = 0, bad = 0;
    std::string first_bad;
    for (std::size_t i = 0; i < ws.size(); ++i)
      for (std::size_t j = i; j < ws.size(); ++j) {
        if (sum(ws[i]) != sum(ws[j])) continue;
        ParamScalar a = pair_word_element(WordExpression::word(ws[i]), es[j]);
        ParamScalar b = pair_word_element(WordExpression::word(ws[j]), es[i]);
        ++checked;
        if (a != b) {
          ++bad;
          if (first_bad.empty()) first_bad = word_str(ws[i]) + " vs " + word_str(ws[j]);
        }
      }
    rep.add("pairing symmetry k=" + std::to_string(k), bad == 0,
            std::to_string(checked) + " pairs" + (bad ? ", first failure " + first_bad : ""));
  }
  // two word decompositions of the same element pair identically
  for (auto [k, d] : {std::pair{3, 0}, std::pair{3, 1}}) {
    WordExpression w0 = build_P_recursive(k, d, 0).word;
    WordExpression w1;
    try {
      w1 = build_P_recursive(k, d, 1).word;
    } catch (const Error&) {
      continue;
    }
    int bad = 0, n = 0;
    for (const auto& c : enumerate_collections(k, d, Rational(d, k) + Rational(1))) {
      ShuffleElement e = collection_product(c);
      bad += pair_word_element(w0, e) != pair_word_element(w1, e);
      ++n;
    }
    rep.add("well-defined P" + bideg(k, d), bad == 0 && !(w0 == w1), std::to_string(n) + " right elements");
  }
  return rep;
}

Report gram_suite(GramConvention conv) {
  Report rep;
  for (auto [k, d] : {std::pair{2, 0}, std::pair{2, 1}, std::pair{3, 0}, std::pair{3, 1}})
    rep.append(gram_check(enumerate_collections(k, d, Rational(d, k) + Rational(1)), conv));
  return rep;
}

Report bialgebra_property_suite(int window) {
  Report rep;
  std::map<std::vector<int>, HSeriesElement> deltas;
  std::map<std::vector<int>, ShuffleElement> elems;
  for (auto [la, lb] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}}) {
    int checked = 0, bad = 0;
    std::string first_bad;
    for (const auto& a : all_words(la, -1, 1))
      for (const auto& b : all_words(lb, -1, 1))
        for (const auto& c : all_words(la + lb, -1, 1)) {
          if (sum(a) + sum(b) != sum(c)) continue;
          if (!elems.count(c)) {
            elems.emplace(c, word_elem(c));
            deltas.emplace(c, delta_truncated(elems.at(c), window));
          }
          const int k = la + lb, d = sum(c);
          if (sum(a) < floor_div(d * la, k) - window) continue;
          std::vector<int> ab = a;
          ab.insert(ab.end(), b.begin(), b.end());
          ParamScalar lhs = pair_word_element(WordExpression::word(ab), elems.at(c));
          ParamScalar rhs = pair_words_tensor({WordExpression::word(b), WordExpression::word(a)}, deltas.at(c));
          ++checked;
          if (lhs != rhs) {
            ++bad;
            if (first_bad.empty()) first_bad = word_str(a) + word_str(b) + " against " + word_str(c);
          }
        }
    rep.add("bialgebra property |a|=" + std::to_string(la) + " |b|=" + std::to_string(lb) + " W=" +
                std::to_string(window),
            bad == 0, std::to_string(checked) + " triples" + (bad ? ", first failure " + first_bad : ""));
  }
  return rep;
}

Report primitivity_suite(int max_k, int max_d) {
  Report rep;
  std::vector<std::pair<int, int>> grid;
  for (int k = 1; k <= max_k; ++k)
    for (int d = -max_d; d <= max_d; ++d) grid.emplace_back(k, d);
  if (max_k >= 5)
    for (int d : {-2, -1, 1, 2})
      if (std::abs(d) > max_d || max_k == 5) grid.emplace_back(5, d);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  for (auto [k, d] : grid) {
    if (k == 5 && std::abs(d) != 1 && std::abs(d) != 2) continue;
    ShuffleElement p = build_P(k, d);
    auto comps = delta_mu(p, Rational(d, k));
    bool ok = comps.front() && comps.back();
    ok = ok && *comps.back() == TensorElement::pure(p, unit_element(), 0);
    ok = ok && *comps.front() == TensorElement::pure(unit_element(), p, k);
    int inner = 0;
    for (int i = 1; i < k; ++i) inner += comps[i].has_value();
    rep.add("primitive P" + bideg(k, d), ok && inner == 0,
            inner ? std::to_string(inner) + " middle components survive" : "two outer components");
  }
  // group-like Q along rays
  for (auto [a, b] : {std::pair{1, 0}, std::pair{1, 1}, std::pair{1, -1}}) {
    auto tq = build_theta_Q(a, b, 2);
    ShuffleElement q2 = tq.Q[1];
    auto comps = delta_mu(q2, Rational(b, a));
    bool ok = true;
    for (int x = 0; x <= 2; ++x) {
      TensorElement want = TensorElement::pure(q_element((2 - x) * a, (2 - x) * b), q_element(x * a, x * b), x * a);
      const auto& got = comps[(2 - x) * a];
      ok = ok && got && *got == want;
    }
    for (int i = 0; i <= 2 * a; ++i)
      if (i % a != 0) ok = ok && !comps[i];
    rep.add("group-like Q" + bideg(2 * a, 2 * b), ok, "Delta_mu(Q) = sum h0 Q (x) Q");
  }
  return rep;
}

Report expdelta_suite(int a, int b, int n_max) {
  Report rep;
  for (int n = 2; n <= n_max; ++n)
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      std::string bits;
      for (int j = 0; j < n - 1; ++j) bits += (mask >> (n - 2 - j)) & 1 ? '1' : '0';
      EpsilonVector e(a, b, n, bits);
      auto piece = [&](int lo, int hi) {  // entries eps_{lo+1} .. eps_{hi-1}
        if (hi == lo) return unit_element();
        return build_X_eps(EpsilonVector(a, b, hi - lo, bits.substr(lo, hi - lo - 1)));
      };
      const int k = e.k();
      std::vector<std::optional<TensorElement>> want(k + 1);
      auto add = [&](int i, const TensorElement& t) { want[i] = want[i] ? *want[i] + t : t; };
      add(k, TensorElement::pure(build_X_eps(e), unit_element(), 0));
      // choose 0 <= u1 < v1 < ... < ut < vt <= n with eps(u) = 1, eps(v) = 0
      std::vector<int> us, vs;
      auto rec = [&](auto&& self, int from) -> void {
        if (!us.empty() && us.size() == vs.size()) {
          const int t = static_cast<int>(us.size());
          ShuffleElement left = piece(0, us[0]);
          for (int j = 0; j < t; ++j) left = mul(left, piece(vs[j], j + 1 < t ? us[j + 1] : n));
          ShuffleElement right = piece(us[0], vs[0]);
          int span = vs[0] - us[0];
          for (int j = 1; j < t; ++j) {
            right = mul(right, piece(us[j], vs[j]));
            span += vs[j] - us[j];
          }
          const int ex = -t + (us[0] == 0 ? 1 : 0);
          ParamScalar c = ParamScalar::monomial(2 * ex, ex, ex % 2 ? Rational(-1) : Rational(1));
          if (!left.is_zero() && !right.is_zero()) add(left.k(), c * TensorElement::pure(left, right, a * span));
        }
        if (us.size() == vs.size()) {
          for (int u = from; u <= n; ++u)
            if (e.eps(u) == 1) {
              us.push_back(u);
              self(self, u + 1);
              us.pop_back();
            }
        } else {
          for (int v = from; v <= n; ++v)
            if (e.eps(v) == 0) {
              vs.push_back(v);
              self(self, v + 1);
              vs.pop_back();
            }
        }
      };
      rec(rec, 0);
      auto got = delta_mu(build_X_eps(e), Rational(b, a));
      bool ok = true;
      int nonzero = 0;
      for (int i = 0; i <= k; ++i) {
        bool g = got[i] && !got[i]->is_zero(), w = want[i] && !want[i]->is_zero();
        nonzero += g;
        ok = ok && g == w && (!g || *got[i] == *want[i]);
      }
      rep.add("expdelta X" + e.key(), ok, std::to_string(nonzero) + " components");
    }
  return rep;
}

Report multiplicativity_suite(int window) {
  Report rep;
  std::vector<std::pair<std::string, ShuffleElement>> fs = {
      {"z^0", build_P(1, 0)}, {"z^1", build_P(1, 1)}, {"z^-1", build_P(1, -1)}, {"P(2,1)", build_P(2, 1)}};
  for (const auto& [na, pa] : fs)
    for (const auto& [nb, pb] : fs) {
      if (pa.k() + pb.k() > 3) continue;
      ShuffleElement prod = shuffle_mul(pa, pb);
      const int k = prod.k(), d = prod.d();
      auto thr = [&](int r) { return floor_div(d * r, k) - window; };
      // a factor's window must reach every degree that can still combine into the product's window
      auto need = [&](const ShuffleElement& other) {
        return [&](int r) {
          int m = std::numeric_limits<int>::max();
          for (int r2 = 0; r2 <= other.k(); ++r2) m = std::min(m, thr(r + r2) - delta_top_degree(other, r2));
          return m;
        };
      };
      HSeriesElement lhs = truncate_tail(delta_expand(prod, thr, window), k, d, window);
      HSeriesElement da = delta_expand(pa, need(pb), window);
      HSeriesElement db = delta_expand(pb, need(pa), window);
      HSeriesElement rhs = truncate_tail(hseries_mul(da, db), k, d, window);
      rep.add("Delta(" + na + " * " + nb + ") W=" + std::to_string(window), lhs == rhs,
              std::to_string(lhs.terms().size()) + " components");
    }
  return rep;
}

Report coassociativity_suite(int window) {
  Report rep;
  for (auto [k, d] : {std::pair{1, 0}, std::pair{1, 2}, std::pair{2, 1}, std::pair{2, 0}, std::pair{2, -1}}) {
    ShuffleElement p = build_P(k, d);
    auto thr = [&](int r) { return floor_div(d * r, k) - window; };
    HSeriesElement outer = delta_expand(p, thr, window);
    HSeriesElement left = apply_delta(outer, 0, [&](const HKey& key, int r2) {
      return floor_div(d * (r2 + key.ks[1]), k) - window - key.degree(1);
    });
    HSeriesElement right = apply_delta(outer, 1, [&](const HKey&, int r3) { return thr(r3); });
    left = truncate_tail(left, k, d, window);
    right = truncate_tail(right, k, d, window);
    rep.add("coassociativity P" + bideg(k, d) + " W=" + std::to_string(window), left == right,
            std::to_string(left.terms().size()) + " components");
  }
  return rep;
}

Report hecke_suite(int window) {
  Report rep;
  for (auto [k, d] : {std::pair{1, -1}, std::pair{1, 0}, std::pair{1, 2}, std::pair{2, 1}, std::pair{2, 0}})
    for (int n = 1; n <= 3; ++n) {
      ShuffleElement p = build_P(k, d);
      HSeriesElement got = hecke_commutator(n, p, window);
      ShuffleElement want = ShuffleElement::from_parts(k, p.num() * power_sum(n, 0, k, k), p.den());
      bool ok = got == HSeriesElement::from_element(want, {}, window);
      if (k == 1) ok = ok && want == build_P(1, d + n);
      rep.add("hecke [p" + std::to_string(n) + ", P" + bideg(k, d) + "]", ok, ok ? "P (z1^n + ...)" : got.str());
    }
  return rep;
}

Report quasi_empty_component_suite(int window) {
  Report rep;
  for (auto [k, d] : {std::pair{2, 1}, std::pair{3, 1}}) {
    HSeriesElement delta = delta_truncated(build_P(k, d), window);
    for (int k2 = 1; k2 < k; ++k2)
      for (int d2 = -6; d2 <= 6; ++d2) {
        LatticeTriangle t{k - k2, d - d2, k2, d2};
        if (classify_triangle(t) == TriangleClass::kNeither) continue;
        if (d2 < floor_div(d * k2, k) - window) continue;
        const int k1 = k - k2, d1 = d - d2;
        TensorElement want = alpha(1).inverse() * TensorElement::pure(q_element(k1, d1), q_element(k2, d2), k2);
        HSeriesElement comp = delta.filtered([&](const HKey& key) {
          return key.ks == std::vector<int>{k1, k2} && key.ds == std::vector<int>{d1, d2} && key.h[0] == h_single(0, k2) &&
                 key.h[1].empty();
        });
        bool ok = comp == tensor_to_hseries(want);
        int others = 0;
        for (const auto& [key, pay] : delta.terms())
          if (key.ks == std::vector<int>{k1, k2} && key.ds[1] == d2 && key.degree(0) == d1 && !(key.h[0] == h_single(0, k2)))
            ++others;
        rep.add("component P" + bideg(k, d) + " at " + bideg(k1, d1) + "(x)" + bideg(k2, d2), ok,
                std::string(to_string(classify_triangle(t))) + ", " + std::to_string(others) + " h_n terms alongside");
      }
  }
  return rep;
}

Report delta_consistency_suite(int window) {
  Report rep;
  for (int d : {-2, 0, 3}) {
    HSeriesElement got = delta_truncated(build_P(1, d), window);
    HSeriesElement want(2, window);
    want.add({{{}, {}}, {1, 0}, {d, 0}}, LaurentPoly::z(0, 1, d), LaurentPoly::constant(1));
    for (int n = 0; n <= window; ++n)
      want.add({{h_single(n), {}}, {0, 1}, {0, d - n}}, LaurentPoly::z(0, 1, d - n), LaurentPoly::constant(1));
    rep.add("Delta(z^" + std::to_string(d) + ") W=" + std::to_string(window), got == want,
            std::to_string(got.terms().size()) + " components");
  }
  std::vector<std::pair<std::string, ShuffleElement>> cases = {{"P(2,1)", build_P(2, 1)},
                                                               {"P(2,0)", build_P(2, 0)},
                                                               {"P(3,1)", build_P(3, 1)},
                                                               {"X(1,1,2;1)", build_X_eps(EpsilonVector(1, 1, 2, "1"))}};
  for (const auto& [name, p] : cases) {
    const int k = p.k(), d = p.d();
    HSeriesElement full = delta_truncated(p, window);
    auto comps = delta_mu(p, Rational(d, k));
    bool ok = true;
    for (int i = 0; i <= k; ++i) {
      const int r = k - i;
      HSeriesElement top = full.filtered([&](const HKey& key) {
        return key.ks[0] == i && static_cast<long>(key.ds[1]) * k == static_cast<long>(d) * r && h_is_h0_power(key.h[0]);
      });
      HSeriesElement want = comps[i] ? tensor_to_hseries(*comps[i]) : HSeriesElement(2);
      ok = ok && top == want;
    }
    rep.add("top slope of Delta " + name, ok, "matches Delta_mu");
  }
  return rep;
}

}  // namespace shuffle
