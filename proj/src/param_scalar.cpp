#include "shuffle/param_scalar.hpp"

#include <stdexcept>

#include "shuffle/errors.hpp"

namespace shuffle {
namespace {

// Dense univariate polynomial over Q in q2, index = degree.
using UPoly = std::vector<Rational>;
// Dense polynomial in s with UPoly coefficients, index = s-degree.
using BPoly = std::vector<UPoly>;

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}
void trim(BPoly& b) {
  while (!b.empty() && b.back().empty()) b.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j].add_product(a[i], b[j]);
  }
  trim(r);
  return r;
}

UPoly usub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

// a = q*b + r over Q.
void udivmod(UPoly a, const UPoly& b, UPoly* q, UPoly* r) {
  Rational inv = Rational(1) / b.back();
  UPoly quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() * inv;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    quo[shift] = c;
    a.pop_back();
    trim(a);
  }
  trim(quo);
  if (q) *q = std::move(quo);
  if (r) *r = std::move(a);
}

void make_monic(UPoly& u) {
  if (u.empty() || u.back().is_one()) return;
  Rational inv = Rational(1) / u.back();
  for (auto& c : u) c *= inv;
}

// Arithmetic modulo the Mersenne prime 2^61 - 1, used only to certify
// coprimality cheaply before falling back to exact remainder sequences.
constexpr uint64_t kP = (uint64_t{1} << 61) - 1;
using ModPoly = std::vector<uint64_t>;

uint64_t mulm(uint64_t a, uint64_t b) {
  unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
  uint64_t r = static_cast<uint64_t>(x & kP) + static_cast<uint64_t>(x >> 61);
  return r >= kP ? r - kP : r;
}
uint64_t addm(uint64_t a, uint64_t b) { return a + b >= kP ? a + b - kP : a + b; }
uint64_t subm(uint64_t a, uint64_t b) { return a >= b ? a - b : a + kP - b; }
uint64_t powm(uint64_t a, uint64_t e) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulm(r, a);
    a = mulm(a, a);
    e >>= 1;
  }
  return r;
}
uint64_t invm(uint64_t a) { return powm(a, kP - 2); }

// Image of a rational; false when the denominator vanishes mod p.
bool to_mod(const Rational& c, uint64_t* out) {
  mpz_class n = c.numerator(), d = c.denominator();
  uint64_t dn = mpz_fdiv_ui(d.get_mpz_t(), kP);
  if (dn == 0) return false;
  *out = mulm(mpz_fdiv_ui(n.get_mpz_t(), kP), invm(dn));
  return true;
}

void trim(ModPoly& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

int mod_gcd_degree(ModPoly a, ModPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    uint64_t inv = invm(b.back());
    while (a.size() >= b.size()) {
      std::size_t shift = a.size() - b.size();
      uint64_t c = mulm(a.back(), inv);
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = subm(a[shift + j], mulm(c, b[j]));
      a.pop_back();
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

bool to_mod(const UPoly& u, ModPoly* out) {
  out->assign(u.size(), 0);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!to_mod(u[i], &(*out)[i])) return false;
  return true;
}

// Rigorous when it returns true: image gcds only overestimate the degree
// as long as the leading coefficients survive reduction.
bool ucoprime_certified(const UPoly& a, const UPoly& b) {
  ModPoly ma, mb;
  if (!to_mod(a, &ma) || !to_mod(b, &mb)) return false;
  if (ma.empty() || mb.empty() || ma.back() == 0 || mb.back() == 0) return false;
  return mod_gcd_degree(ma, mb) == 0;
}

uint64_t horner(const ModPoly& u, uint64_t x) {
  uint64_t r = 0;
  for (std::size_t i = u.size(); i-- > 0;) r = addm(mulm(r, x), u[i]);
  return r;
}

UPoly ugcd(UPoly a, UPoly b) {
  if (!a.empty() && !b.empty() && ucoprime_certified(a, b)) return UPoly{Rational(1)};
  while (!b.empty()) {
    UPoly r;
    udivmod(std::move(a), b, nullptr, &r);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a);
  return a;
}

UPoly uexact(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  udivmod(a, b, &q, &r);
  if (!r.empty()) throw InexactDivision("param gcd: content division");
  return q;
}

UPoly content(const BPoly& b) {
  UPoly g;
  for (const auto& c : b) {
    if (c.empty()) continue;
    g = g.empty() ? c : ugcd(g, c);
    if (g.size() == 1) break;
  }
  make_monic(g);
  return g;
}

BPoly primitive(const BPoly& b, const UPoly& cont) {
  if (cont.size() == 1) {
    Rational inv = Rational(1) / cont[0];
    BPoly r = b;
    for (auto& c : r)
      for (auto& x : c) x *= inv;
    return r;
  }
  BPoly r;
  r.reserve(b.size());
  for (const auto& c : b) r.push_back(c.empty() ? UPoly{} : uexact(c, cont));
  return r;
}

// lc(b)^* a reduced modulo b in s.
BPoly pseudo_rem(BPoly a, const BPoly& b) {
  const UPoly& lc = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    UPoly top = a.back();
    for (auto& c : a) c = umul(c, lc);
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = usub(a[shift + j], umul(top, b[j]));
    a.pop_back();
    trim(a);
  }
  return a;
}

// True only if gcd(A, B) is certainly a constant: both partial degrees of
// the gcd are bounded by those of modular images at a point.
bool bcoprime_certified(const BPoly& A, const BPoly& B) {
  std::vector<ModPoly> ma, mb;
  auto load = [](const BPoly& P, std::vector<ModPoly>* out) {
    out->resize(P.size());
    for (std::size_t i = 0; i < P.size(); ++i)
      if (!to_mod(P[i], &(*out)[i])) return false;
    return true;
  };
  if (!load(A, &ma) || !load(B, &mb)) return false;
  for (uint64_t r = 3; r < 40; r += 7) {
    // q2 = r: polynomial in s.
    ModPoly ea, eb;
    for (const auto& c : ma) ea.push_back(horner(c, r));
    for (const auto& c : mb) eb.push_back(horner(c, r));
    if (ea.back() == 0 || eb.back() == 0) continue;
    if (mod_gcd_degree(ea, eb) != 0) return false;
    // s = r: polynomial in q2; the top q2-degree coefficient must survive.
    auto eval_s = [r](const std::vector<ModPoly>& P, ModPoly* out, bool* ok) {
      std::size_t deg = 0;
      for (const auto& c : P) deg = std::max(deg, c.size());
      out->assign(deg, 0);
      uint64_t pw = 1;
      for (const auto& c : P) {
        for (std::size_t j = 0; j < c.size(); ++j) (*out)[j] = addm((*out)[j], mulm(pw, c[j]));
        pw = mulm(pw, r);
      }
      *ok = !out->empty() && out->back() != 0;
    };
    bool oka, okb;
    eval_s(ma, &ea, &oka);
    eval_s(mb, &eb, &okb);
    if (!oka || !okb) continue;
    return mod_gcd_degree(ea, eb) == 0;
  }
  return false;
}

// Heuristic gcd: Kronecker-substitute to one variable, evaluate at a large
// integer, take the integer gcd and read the candidate back from its
// balanced xi-adic digits. Any candidate that divides both inputs is the
// gcd; callers fall back to the remainder sequence when none is found.
bool heuristic_gcd(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly* out) {
  auto shifted = [](const LaurentPoly& p) {
    return p.times_monomial(pm(-p.min_exp(Monomial::kS), -p.min_exp(Monomial::kQ2)));
  };
  LaurentPoly A = shifted(a), B = shifted(b);
  const int D = std::max(A.max_exp(Monomial::kS), B.max_exp(Monomial::kS)) + 1;
  auto integral = [](const LaurentPoly& p, mpz_class* norm) {
    mpz_class l = 1;
    for (const auto& t : p.terms()) {
      mpz_class d = t.coeff.denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> v;
    *norm = 0;
    for (const auto& t : p.terms()) {
      mpz_class c = t.coeff.numerator() * (l / t.coeff.denominator());
      if (abs(c) > *norm) *norm = abs(c);
      v.push_back(c);
    }
    return v;
  };
  mpz_class na, nb;
  auto ia = integral(A, &na), ib = integral(B, &nb);
  auto eval = [&](const LaurentPoly& p, const std::vector<mpz_class>& coeffs, const mpz_class& xi) {
    mpz_class r = 0, pw;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      const auto& t = p.terms()[i];
      unsigned long e = static_cast<unsigned long>(t.mono.s() + D * t.mono.q2());
      mpz_pow_ui(pw.get_mpz_t(), xi.get_mpz_t(), e);
      r += coeffs[i] * pw;
    }
    return r;
  };
  mpz_class xi = 2 * std::min(na, nb) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    mpz_class h;
    mpz_class ea = eval(A, ia, xi), eb = eval(B, ib, xi);
    mpz_gcd(h.get_mpz_t(), ea.get_mpz_t(), eb.get_mpz_t());
    std::vector<Term> terms;
    mpz_class half = xi / 2;
    for (long idx = 0; h != 0; ++idx) {
      mpz_class c;
      mpz_fdiv_r(c.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
      if (c > half) c -= xi;
      if (c != 0) terms.push_back({pm(static_cast<int>(idx % D), static_cast<int>(idx / D)), Rational(mpq_class(c))});
      h = (h - c) / xi;
      if (idx > 1 << 20) break;
    }
    if (!terms.empty()) {
      LaurentPoly g = LaurentPoly::from_terms(0, std::move(terms));
      try {
        exact_div(A, g);
        exact_div(B, g);
        *out = g;
        return true;
      } catch (const InexactDivision&) {
      }
    }
    xi = xi * 73794 / 27011;
  }
  return false;
}

BPoly to_dense(const LaurentPoly& p) {
  int s0 = p.min_exp(Monomial::kS), q0 = p.min_exp(Monomial::kQ2);
  BPoly b(p.max_exp(Monomial::kS) - s0 + 1);
  for (const auto& t : p.terms()) {
    UPoly& u = b[t.mono.s() - s0];
    std::size_t j = t.mono.q2() - q0;
    if (u.size() <= j) u.resize(j + 1);
    u[j] = t.coeff;
  }
  for (auto& u : b) trim(u);
  return b;
}

LaurentPoly from_dense(const BPoly& b) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b[i].size(); ++j)
      if (!b[i][j].is_zero()) terms.push_back({pm(static_cast<int>(i), static_cast<int>(j)), b[i][j]});
  return LaurentPoly::from_terms(0, std::move(terms));
}

}  // namespace

LaurentPoly param_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.var_count() != 0 || b.var_count() != 0) throw VarCountMismatch("param_gcd: z variables present");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.size() == 1 || b.size() == 1) return LaurentPoly::constant(1);
  BPoly A = to_dense(a), B = to_dense(b);
  if (bcoprime_certified(A, B)) return LaurentPoly::constant(1);
  LaurentPoly h;
  if (heuristic_gcd(a, b, &h)) return h;
  if (A.size() < B.size()) std::swap(A, B);
  UPoly ca = content(A), cb = content(B);
  UPoly cg = ugcd(ca, cb);
  A = primitive(A, ca);
  B = primitive(B, cb);
  while (B.size() > 1) {
    BPoly r = pseudo_rem(A, B);
    A = std::move(B);
    if (r.empty()) {
      B.clear();
      break;
    }
    B = primitive(r, content(r));
  }
  BPoly g;
  if (B.empty()) {
    g = std::move(A);
  } else {
    g = BPoly{UPoly{Rational(1)}};
  }
  for (auto& c : g) c = umul(c, cg);
  return from_dense(g);
}

ParamScalar::ParamScalar(const LaurentPoly& num) : num_(num), den_(LaurentPoly::constant(1)) {
  if (num.var_count() != 0) throw VarCountMismatch("ParamScalar: z variables in numerator");
}

ParamScalar::ParamScalar(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (num.var_count() != 0 || den.var_count() != 0) throw VarCountMismatch("ParamScalar: z variables present");
  if (den.is_zero()) throw std::domain_error("ParamScalar: zero denominator");
  normalize();
}

ParamScalar ParamScalar::monomial(int s_exp, int q2_exp, const Rational& c) {
  return ParamScalar(LaurentPoly::param(s_exp, q2_exp, c));
}

void ParamScalar::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(1);
    return;
  }
  if (!den_.is_constant()) {
    LaurentPoly g = param_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  Monomial shift = pm(-den_.min_exp(Monomial::kS), -den_.min_exp(Monomial::kQ2));
  mpz_class g = 0, l = 1;
  for (const auto& t : den_.terms()) {
    mpz_class n = t.coeff.numerator();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    mpz_class d = t.coeff.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  Rational scale(mpq_class(l, g));
  if (den_.leading().coeff.sign() < 0) scale = -scale;
  num_ = num_.times_monomial(shift, scale);
  den_ = den_.times_monomial(shift, scale);
}

bool ParamScalar::is_one() const { return num_ == den_; }

ParamScalar ParamScalar::operator-() const {
  ParamScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

ParamScalar ParamScalar::inverse() const {
  if (num_.is_zero()) throw std::domain_error("ParamScalar: inverse of zero");
  return ParamScalar(den_, num_);
}

ParamScalar ParamScalar::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  ParamScalar r = 1, base = *this;
  while (n > 0) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return r;
}

ParamScalar operator+(const ParamScalar& a, const ParamScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return ParamScalar(a.num_ + b.num_, a.den_);
  return ParamScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ParamScalar operator-(const ParamScalar& a, const ParamScalar& b) { return a + (-b); }

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
  if (a.is_zero() || b.is_zero()) return ParamScalar();
  if (a.den_.is_constant() && b.den_.is_constant()) {
    ParamScalar r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
  }
  return ParamScalar(a.num_ * b.num_, a.den_ * b.den_);
}

ParamScalar operator/(const ParamScalar& a, const ParamScalar& b) { return a * b.inverse(); }

bool operator==(const ParamScalar& a, const ParamScalar& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

Rational ParamScalar::evaluate(const Rational& s, const Rational& q2) const {
  auto value = [&](const LaurentPoly& p) {
    Rational v = 0;
    for (const auto& t : p.terms()) v += t.coeff * rational_pow(s, t.mono.s()) * rational_pow(q2, t.mono.q2());
    return v;
  };
  Rational d = value(den_);
  if (d.is_zero()) throw std::domain_error("ParamScalar: evaluation at a pole");
  return value(num_) / d;
}

std::string ParamScalar::str() const {
  if (den_.is_constant() && den_.coeff(Monomial{}).is_one()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

ParamScalar ParamScalar::parse(std::string_view text) {
  auto split = text.find(") / (");
  if (split == std::string_view::npos) return ParamScalar(LaurentPoly::parse(text, 0));
  if (text.front() != '(' || text.back() != ')') throw ParseError("bad scalar: " + std::string(text));
  return ParamScalar(LaurentPoly::parse(text.substr(1, split - 1), 0),
                     LaurentPoly::parse(text.substr(split + 5, text.size() - split - 6), 0));
}

ParamScalar q1_pow(int n) { return ParamScalar::monomial(2 * n, 0); }
ParamScalar q2_pow(int n) { return ParamScalar::monomial(0, n); }
ParamScalar q_pow(int n) { return ParamScalar::monomial(2 * n, n); }

}  // namespace shuffle
