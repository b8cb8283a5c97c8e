#include "shuffle/symfunc.hpp"

#include <algorithm>

#include "shuffle/errors.hpp"
#include "shuffle/generators.hpp"

namespace shuffle {
namespace {

ParamScalar minus_q_pow(int r) { return r % 2 ? -q_pow(r) : q_pow(r); }

int ones(const std::string& e) { return static_cast<int>(std::count(e.begin(), e.end(), '1')); }

std::string bits_of(int mask, int len) {
  std::string s;
  for (int j = len - 1; j >= 0; --j) s += (mask >> j) & 1 ? '1' : '0';
  return s;
}

// complete homogeneous h_m in z_1..z_vars
LaurentPoly h_poly(int m, int vars) {
  if (m < 0) return LaurentPoly::constant(0, vars);
  // row[j] = h_j in the first v variables
  std::vector<LaurentPoly> row(m + 1, LaurentPoly::constant(0, vars));
  row[0] = LaurentPoly::constant(1, vars);
  for (int v = 0; v < vars; ++v)
    for (int j = 1; j <= m; ++j) row[j] = row[j] + LaurentPoly::z(v, vars) * row[j - 1];
  return row[m];
}

std::string show(const LaurentPoly& p) { return p.is_zero() ? "0" : "nonzero difference"; }

}  // namespace

RibbonExpr RibbonExpr::ribbon(const std::string& eps, const ParamScalar& c) {
  RibbonExpr r;
  r.add(eps, c);
  return r;
}

void RibbonExpr::add(const std::string& eps, const ParamScalar& c) {
  if (eps.find_first_not_of("01") != std::string::npos) throw Error("RibbonExpr: ribbon must be a binary string");
  const int deg = static_cast<int>(eps.size()) + 1;
  if (degree_ >= 0 && deg != degree_) throw Error("RibbonExpr: mixed degrees");
  if (c.is_zero()) return;
  degree_ = deg;
  auto [it, fresh] = terms_.try_emplace(eps, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  if (terms_.empty()) degree_ = -1;
}

RibbonExpr operator+(const RibbonExpr& a, const RibbonExpr& b) {
  RibbonExpr r = a;
  for (const auto& [e, c] : b.terms_) r.add(e, c);
  return r;
}

RibbonExpr operator-(const RibbonExpr& a, const RibbonExpr& b) { return a + ParamScalar(-1) * b; }

RibbonExpr operator*(const ParamScalar& c, const RibbonExpr& a) {
  RibbonExpr r;
  for (const auto& [e, x] : a.terms_) r.add(e, c * x);
  return r;
}

std::string RibbonExpr::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*s[" + e + "]";
  }
  return s;
}

RibbonExpr ribbon_mul(const std::string& e, const std::string& f) {
  RibbonExpr r;
  r.add(e + "0" + f, 1);
  r.add(e + "1" + f, 1);
  return r;
}

RibbonExpr ribbon_mul(const RibbonExpr& a, const RibbonExpr& b) {
  RibbonExpr r;
  for (const auto& [e, c] : a.terms())
    for (const auto& [f, x] : b.terms()) r = r + (c * x) * ribbon_mul(e, f);
  return r;
}

RibbonExpr hook_powersum(int n) {
  if (n < 1) throw Error("hook_powersum: n must be positive");
  RibbonExpr r;
  for (int j = 0; j < n; ++j) r.add(std::string(n - 1 - j, '0') + std::string(j, '1'), (n - 1 - j) % 2 ? -1 : 1);
  return r;
}

std::vector<int> ribbon_rows(const std::string& eps) {
  std::vector<int> rows{1};
  for (char c : eps) {
    if (c == '1')
      ++rows.back();
    else
      rows.push_back(1);
  }
  return rows;
}

LaurentPoly ribbon_polynomial(const std::string& eps, int vars) {
  const auto rows = ribbon_rows(eps);
  const int gaps = static_cast<int>(rows.size()) - 1;
  LaurentPoly total = LaurentPoly::constant(0, vars);
  // each subset of gaps to merge gives one coarsening
  for (int mask = 0; mask < (1 << gaps); ++mask) {
    LaurentPoly term = LaurentPoly::constant(1, vars);
    int part = rows[0], merged = 0;
    for (int g = 0; g < gaps; ++g) {
      if ((mask >> g) & 1) {
        part += rows[g + 1];
        ++merged;
      } else {
        term = term * h_poly(part, vars);
        part = rows[g + 1];
      }
    }
    term = term * h_poly(part, vars);
    total = merged % 2 ? total - term : total + term;
  }
  return total;
}

LaurentPoly expr_polynomial(const RibbonExpr& e, int vars) {
  LaurentPoly total = LaurentPoly::constant(0, vars);
  for (const auto& [eps, c] : e.terms()) {
    if (!c.num().is_constant() || !c.den().is_constant()) throw Error("expr_polynomial: coefficients must be rational");
    total = total + ribbon_polynomial(eps, vars) * (c.num().leading().coeff / c.den().leading().coeff);
  }
  return total;
}

LaurentPoly power_sum_polynomial(int n, int vars) {
  LaurentPoly total = LaurentPoly::constant(0, vars);
  for (int v = 0; v < vars; ++v) total = total + LaurentPoly::z(v, vars, n);
  return total;
}

ShuffleElement visa_image(const RibbonExpr& e, int a, int b) {
  if (e.is_zero()) throw Error("visa_image: zero expression");
  std::vector<std::pair<EpsilonVector, ParamScalar>> parts;
  for (const auto& [eps, c] : e.terms()) parts.emplace_back(EpsilonVector(a, b, e.degree(), eps), c * minus_q_pow(ones(eps)));
  return build_X_eps_sum(parts);
}

ParamScalar isom_constant(int n, int a) {
  ParamScalar one(1);
  ParamScalar c = (q1_pow(n) - 1) * (one - q2_pow(n)) / ((q1_pow(1) - 1).pow(n * a) * (one - q2_pow(1)).pow(n * a));
  return n % 2 ? c : -c;
}

Report ribbon_rule_suite(int n_max) {
  Report rep;
  const int vars = std::min(n_max, 6);
  for (int n = 2; n <= n_max; ++n)
    for (int l = 1; l < n; ++l)
      for (int x = 0; x < (1 << (l - 1)); ++x)
        for (int y = 0; y < (1 << (n - l - 1)); ++y) {
          std::string e = bits_of(x, l - 1), f = bits_of(y, n - l - 1);
          LaurentPoly diff = ribbon_polynomial(e, vars) * ribbon_polynomial(f, vars) - expr_polynomial(ribbon_mul(e, f), vars);
          rep.add("ribbon s[" + e + "]*s[" + f + "]", diff.is_zero(), show(diff));
        }
  for (int n = 1; n <= n_max; ++n) {
    LaurentPoly diff = expr_polynomial(hook_powersum(n), vars) - power_sum_polynomial(n, vars);
    rep.add("ribbon p" + std::to_string(n), diff.is_zero(), show(diff));
  }
  return rep;
}

Report check_visa(int a, int b, int n_max) {
  Report rep;
  const std::string ray = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  for (int n = 2; n <= n_max; ++n)
    for (int l = 1; l < n; ++l)
      for (int x = 0; x < (1 << (l - 1)); ++x)
        for (int y = 0; y < (1 << (n - l - 1)); ++y) {
          std::string e = bits_of(x, l - 1), f = bits_of(y, n - l - 1);
          ShuffleElement lhs = shuffle_mul(visa_image(RibbonExpr::ribbon(e), a, b), visa_image(RibbonExpr::ribbon(f), a, b));
          ShuffleElement rhs = visa_image(ribbon_mul(e, f), a, b);
          bool ok = lhs == rhs;
          rep.add("visa" + ray + " s[" + e + "]*s[" + f + "]", ok, ok ? "products intertwine" : "images differ");
        }
  for (int n = 1; n <= n_max; ++n) {
    ShuffleElement img = visa_image(hook_powersum(n), a, b);
    ShuffleElement want = isom_constant(n, a) * build_P(n * a, n * b);
    bool ok = img == want;
    rep.add("visa" + ray + " p" + std::to_string(n), ok, ok ? "image is c*P(" + std::to_string(n * a) + "," + std::to_string(n * b) + ")" : "image differs from c*P");
  }
  return rep;
}

}  // namespace shuffle
