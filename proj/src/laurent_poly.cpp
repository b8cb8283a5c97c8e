#include "shuffle/laurent_poly.hpp"

#include <algorithm>
#include <climits>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "shuffle/errors.hpp"

namespace shuffle {
namespace {

void check_same(const LaurentPoly& a, const LaurentPoly& b, const char* op) {
  if (a.var_count() != b.var_count()) {
    throw VarCountMismatch(std::string(op) + ": variable count " + std::to_string(a.var_count()) + " vs " +
                           std::to_string(b.var_count()));
  }
}

void check_var_count(int k) {
  if (k < 0 || k > kMaxZ) throw VarCountMismatch("variable count out of range: " + std::to_string(k));
}

// Merge two ascending term runs, c_a * a + c_b * b.
std::vector<Term> merge_scaled(const std::vector<Term>& a, Monomial shift_a, const Rational& ca,
                               const std::vector<Term>& b, Monomial shift_b, const Rational& cb) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono + shift_a < b[j].mono + shift_b)) {
      out.push_back({a[i].mono + shift_a, a[i].coeff * ca});
      ++i;
    } else if (i == a.size() || b[j].mono + shift_b < a[i].mono + shift_a) {
      out.push_back({b[j].mono + shift_b, b[j].coeff * cb});
      ++j;
    } else {
      Rational c = a[i].coeff * ca;
      c.add_product(b[j].coeff, cb);
      if (!c.is_zero()) out.push_back({a[i].mono + shift_a, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

// Friend-accessible constructor from already canonical terms.
class PolyBuilder {
 public:
  static LaurentPoly make(int k, std::vector<Term> terms) {
    LaurentPoly p(k);
    p.terms_ = std::move(terms);
    return p;
  }
};

LaurentPoly::LaurentPoly(int var_count) : var_count_(var_count) { check_var_count(var_count); }

LaurentPoly LaurentPoly::constant(const Rational& c, int var_count) {
  return monomial(Monomial{}, c, var_count);
}

LaurentPoly LaurentPoly::monomial(Monomial m, const Rational& c, int var_count) {
  LaurentPoly p(var_count);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

LaurentPoly LaurentPoly::param(int s_exp, int q2_exp, const Rational& c) {
  return monomial(Monomial::params(s_exp, q2_exp), c, 0);
}

LaurentPoly LaurentPoly::z(int i, int var_count, int exp) {
  if (i < 0 || i >= var_count) throw VarCountMismatch("z index out of range");
  return monomial(Monomial::z(i, exp), 1, var_count);
}

LaurentPoly LaurentPoly::from_terms(int var_count, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return PolyBuilder::make(var_count, std::move(out));
}

bool LaurentPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == Monomial{});
}

bool LaurentPoly::z_free() const noexcept {
  for (const auto& t : terms_)
    if (!t.mono.z_free()) return false;
  return true;
}

Rational LaurentPoly::coeff(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, Monomial x) { return t.mono < x; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(var_count_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  check_same(a, b, "add");
  return PolyBuilder::make(a.var_count_, merge_scaled(a.terms_, {}, 1, b.terms_, {}, 1));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  check_same(a, b, "sub");
  return PolyBuilder::make(a.var_count_, merge_scaled(a.terms_, {}, 1, b.terms_, {}, -1));
}

LaurentPoly operator*(const LaurentPoly& a, const Rational& c) {
  if (c.is_zero()) return LaurentPoly(a.var_count_);
  LaurentPoly r(a.var_count_);
  r.terms_.reserve(a.terms_.size());
  for (const auto& t : a.terms_) r.terms_.push_back({t.mono, t.coeff * c});
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  check_same(a, b, "mul");
  const LaurentPoly& small = a.size() <= b.size() ? a : b;
  const LaurentPoly& large = a.size() <= b.size() ? b : a;
  if (small.is_zero()) return LaurentPoly(a.var_count_);
  if (small.size() == 1) return large.times_monomial(small.terms_[0].mono, small.terms_[0].coeff);
  if (small.size() == 2) {
    const auto& s = small.terms_;
    return large.times_binomial(s[0].mono, s[0].coeff, s[1].mono, s[1].coeff);
  }
  // Johnson's heap multiplication: one ascending stream per term of the
  // smaller factor, merged through a min-heap.
  struct Entry {
    Monomial mono;
    uint32_t i, j;
  };
  auto cmp = [](const Entry& x, const Entry& y) { return y.mono < x.mono; };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
  const auto& st = small.terms_;
  const auto& lt = large.terms_;
  for (uint32_t i = 0; i < st.size(); ++i) heap.push({st[i].mono + lt[0].mono, i, 0});
  std::vector<Term> out;
  out.reserve(lt.size() * 2);
  while (!heap.empty()) {
    Entry e = heap.top();
    heap.pop();
    if (!out.empty() && out.back().mono == e.mono) {
      out.back().coeff.add_product(st[e.i].coeff, lt[e.j].coeff);
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back({e.mono, st[e.i].coeff * lt[e.j].coeff});
    }
    if (e.j + 1 < lt.size()) heap.push({st[e.i].mono + lt[e.j + 1].mono, e.i, e.j + 1});
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return PolyBuilder::make(a.var_count_, std::move(out));
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.var_count_ != b.var_count_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::times_monomial(Monomial m, const Rational& c) const {
  if (c.is_zero()) return LaurentPoly(var_count_);
  LaurentPoly r(var_count_);
  r.terms_.reserve(terms_.size());
  if (c.is_one()) {
    for (const auto& t : terms_) r.terms_.push_back({t.mono + m, t.coeff});
  } else {
    for (const auto& t : terms_) r.terms_.push_back({t.mono + m, t.coeff * c});
  }
  return r;
}

LaurentPoly LaurentPoly::times_binomial(Monomial m1, const Rational& c1, Monomial m2, const Rational& c2) const {
  return PolyBuilder::make(var_count_, merge_scaled(terms_, m1, c1, terms_, m2, c2));
}

LaurentPoly LaurentPoly::times_linear(int i, Monomial param, int j) const {
  return times_binomial(Monomial::z(i), 1, param + Monomial::z(j), -1);
}

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) throw Error("LaurentPoly::pow: negative exponent");
  LaurentPoly result = constant(1, var_count_);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::permuted(std::span<const int> perm) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  const int n = static_cast<int>(perm.size());
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    for (int i = 0; i < n; ++i) m.set(Monomial::z_slot(perm[i]), t.mono.zexp(i));
    out.push_back({m, t.coeff});
  }
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  return PolyBuilder::make(var_count_, std::move(out));
}

LaurentPoly LaurentPoly::substitute(std::span<const Monomial> images, int new_var_count) const {
  check_var_count(new_var_count);
  if (static_cast<int>(images.size()) < var_count_) throw Error("substitute: rule not total on variables");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = t.mono.param_part();
    for (int i = 0; i < var_count_; ++i) {
      int e = t.mono.zexp(i);
      if (e != 0) m += images[i].scaled(e);
    }
    out.push_back({m, t.coeff});
  }
  return from_terms(new_var_count, std::move(out));
}

LaurentPoly LaurentPoly::with_var_count(int k) const {
  check_var_count(k);
  for (const auto& t : terms_)
    for (int i = k; i < var_count_; ++i)
      if (t.mono.zexp(i) != 0) throw VarCountMismatch("with_var_count: variable in use");
  return PolyBuilder::make(k, terms_);
}

LaurentPoly LaurentPoly::specialize_params(const Rational& s, const Rational& q2) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    out.push_back({t.mono.z_part(), t.coeff * rational_pow(s, t.mono.s()) * rational_pow(q2, t.mono.q2())});
  }
  return from_terms(var_count_, std::move(out));
}

int LaurentPoly::max_degree(int first, int count) const {
  int best = INT_MIN;
  for (const auto& t : terms_) best = std::max(best, t.mono.z_degree(first, count));
  return best;
}

int LaurentPoly::min_degree(int first, int count) const {
  int best = INT_MAX;
  for (const auto& t : terms_) best = std::min(best, t.mono.z_degree(first, count));
  return best;
}

LaurentPoly LaurentPoly::part_with_degree(int first, int count, int deg) const {
  LaurentPoly r(var_count_);
  for (const auto& t : terms_)
    if (t.mono.z_degree(first, count) == deg) r.terms_.push_back(t);
  return r;
}

int LaurentPoly::max_exp(int slot) const {
  int best = INT_MIN;
  for (const auto& t : terms_) best = std::max(best, t.mono.get(slot));
  return best;
}

int LaurentPoly::min_exp(int slot) const {
  int best = INT_MAX;
  for (const auto& t : terms_) best = std::min(best, t.mono.get(slot));
  return best;
}

bool LaurentPoly::z_homogeneous(int* degree) const {
  if (terms_.empty()) return true;
  int d = terms_[0].mono.z_degree();
  for (const auto& t : terms_)
    if (t.mono.z_degree() != d) return false;
  if (degree) *degree = d;
  return true;
}

std::string monomial_str(Monomial m, int var_count) {
  std::string out;
  auto put = [&](const std::string& name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += ' ';
    out += name + "^" + std::to_string(e);
  };
  put("s", m.s());
  put("q2", m.q2());
  for (int i = 0; i < var_count; ++i) put("z" + std::to_string(i + 1), m.zexp(i));
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += " + ";
    out += terms_[i].coeff.str();
    std::string ms = monomial_str(terms_[i].mono, var_count_);
    if (!ms.empty()) out += " * " + ms;
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text, int var_count) {
  check_var_count(var_count);
  std::vector<Term> terms;
  auto trim = [](std::string_view v) {
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\r')) v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  if (text == "0" || text.empty()) return LaurentPoly(var_count);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(" + ", pos);
    std::string_view piece = trim(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    std::size_t star = piece.find(" * ");
    Term t{Monomial{}, Rational::parse(trim(piece.substr(0, star)))};
    if (star != std::string_view::npos) {
      std::istringstream tokens{std::string(piece.substr(star + 3))};
      std::string tok;
      while (tokens >> tok) {
        auto caret = tok.find('^');
        if (caret == std::string::npos) throw ParseError("monomial token without exponent: " + tok);
        std::string name = tok.substr(0, caret);
        int e = std::stoi(tok.substr(caret + 1));
        int slot;
        if (name == "s") {
          slot = Monomial::kS;
        } else if (name == "q2") {
          slot = Monomial::kQ2;
        } else if (name.size() > 1 && name[0] == 'z') {
          int idx = std::stoi(name.substr(1)) - 1;
          if (idx < 0 || idx >= var_count) throw ParseError("variable out of range: " + name);
          slot = Monomial::z_slot(idx);
        } else {
          throw ParseError("unknown symbol: " + name);
        }
        t.mono.set(slot, t.mono.get(slot) + e);
      }
    }
    terms.push_back(std::move(t));
    if (next == std::string_view::npos) break;
    pos = next + 3;
  }
  return from_terms(var_count, std::move(terms));
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  check_same(a, b, "exact_div");
  if (b.is_zero()) throw std::domain_error("exact_div: division by zero");
  const int k = a.var_count_;
  if (a.is_zero()) return LaurentPoly(k);
  if (b.size() == 1) {
    Rational inv = Rational(1) / b.terms_[0].coeff;
    return a.times_monomial(Monomial{} - b.terms_[0].mono, inv);
  }
  // a z-free divisor acts on each z-coefficient separately
  if (k > 0 && std::all_of(b.terms_.begin(), b.terms_.end(), [](const Term& t) { return t.mono.z_part() == Monomial{}; })) {
    std::unordered_map<Monomial, std::vector<Term>, MonomialHash> groups;
    for (const auto& t : a.terms_) groups[t.mono.z_part()].push_back({t.mono.param_part(), t.coeff});
    LaurentPoly b0 = LaurentPoly::from_terms(0, b.terms_);
    std::vector<Term> out;
    out.reserve(a.terms_.size());
    for (auto& [zm, terms] : groups) {
      LaurentPoly q = exact_div(LaurentPoly::from_terms(0, std::move(terms)), b0);
      for (const auto& t : q.terms_) out.push_back({t.mono + zm, t.coeff});
    }
    return LaurentPoly::from_terms(k, std::move(out));
  }
  // Per-slot exponent box of the quotient: degrees are additive in every
  // variable over an integral domain, so any quotient term outside the box
  // proves a nonzero remainder.
  int lo[kSlots], hi[kSlots];
  for (int s = 0; s < kSlots; ++s) {
    lo[s] = a.min_exp(s) - b.min_exp(s);
    hi[s] = a.max_exp(s) - b.max_exp(s);
  }
  const Term& lead = b.terms_.back();
  Rational lead_inv = Rational(1) / lead.coeff;

  struct Pending {
    Monomial mono;
    Rational coeff;
  };
  auto cmp = [](const Pending& x, const Pending& y) { return x.mono < y.mono; };
  std::priority_queue<Pending, std::vector<Pending>, decltype(cmp)> heap(cmp);
  std::vector<Term> quotient;
  std::ptrdiff_t ai = static_cast<std::ptrdiff_t>(a.terms_.size()) - 1;
  while (ai >= 0 || !heap.empty()) {
    Monomial m = ai >= 0 ? a.terms_[ai].mono : heap.top().mono;
    if (!heap.empty() && m < heap.top().mono) m = heap.top().mono;
    Rational c = 0;
    if (ai >= 0 && a.terms_[ai].mono == m) {
      c = a.terms_[ai].coeff;
      --ai;
    }
    while (!heap.empty() && heap.top().mono == m) {
      c += heap.top().coeff;
      heap.pop();
    }
    if (c.is_zero()) continue;
    Monomial qm = m - lead.mono;
    for (int s = 0; s < kSlots; ++s) {
      int e = qm.get(s);
      if (e < lo[s] || e > hi[s]) throw InexactDivision("exact_div: nonzero remainder");
    }
    Rational qc = c * lead_inv;
    for (std::size_t t = 0; t + 1 < b.terms_.size(); ++t) {
      heap.push({qm + b.terms_[t].mono, -(qc * b.terms_[t].coeff)});
    }
    quotient.push_back({qm, std::move(qc)});
  }
  std::reverse(quotient.begin(), quotient.end());
  return PolyBuilder::make(k, std::move(quotient));
}

LaurentPoly divide_by_difference(const LaurentPoly& a, int i, int j) {
  const int k = a.var_count_;
  if (i == j || i < 0 || j < 0 || i >= k || j >= k) throw Error("divide_by_difference: bad variables");
  const int si = Monomial::z_slot(i), sj = Monomial::z_slot(j);
  // Group by (all other exponents, e_i + e_j); within a group the slice is a
  // binary form in (z_i, z_j) and the quotient coefficients are suffix sums.
  struct Item {
    Monomial key;
    int e;
    const Rational* c;
  };
  std::vector<Item> items;
  items.reserve(a.terms_.size());
  for (const auto& t : a.terms_) {
    Monomial key = t.mono;
    int ei = key.get(si), ej = key.get(sj);
    key.set(si, 0);
    key.set(sj, ei + ej);
    items.push_back({key, ei, &t.coeff});
  }
  std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
    if (x.key != y.key) return x.key < y.key;
    return x.e > y.e;
  });
  std::vector<Term> out;
  out.reserve(a.terms_.size());
  std::size_t g = 0;
  while (g < items.size()) {
    std::size_t h = g;
    while (h < items.size() && items[h].key == items[g].key) ++h;
    const Monomial key = items[g].key;
    const int total = key.get(sj);
    auto emit = [&](int e, const Rational& c) {
      Monomial m = key;
      m.set(si, e);
      m.set(sj, total - 1 - e);
      out.push_back({m, c});
    };
    Rational cum = 0;
    for (std::size_t t = g; t < h; ++t) {
      cum += *items[t].c;
      if (t + 1 == h || cum.is_zero()) continue;
      for (int e = items[t].e - 1; e >= items[t + 1].e; --e) emit(e, cum);
    }
    if (!cum.is_zero()) throw InexactDivision("divide_by_difference: nonzero remainder");
    g = h;
  }
  return LaurentPoly::from_terms(k, std::move(out));
}

}  // namespace shuffle
