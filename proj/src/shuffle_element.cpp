#include "shuffle/shuffle_element.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "shuffle/errors.hpp"
#include "shuffle/symmetrize.hpp"

namespace shuffle {
namespace {

const Monomial kQ = pm(2, 1);
const Monomial kQ1 = pm(2, 0);
const Monomial kQ2m = pm(0, 1);

// Images z_i -> z_{slots[i]} for relocating a polynomial.
LaurentPoly place(const LaurentPoly& p, const std::vector<int>& slots, int var_count) {
  std::vector<Monomial> img;
  for (int s : slots) img.push_back(Monomial::z(s));
  return p.substitute(img, var_count);
}

// prod_{i in a, j in b} (z_i - q z_j)(z_j - q1 z_i)(z_j - q2 z_i) applied to g.
LaurentPoly times_cross(LaurentPoly g, int first, int ka, int kb) {
  for (int i = first; i < first + ka; ++i) {
    for (int j = first + ka; j < first + ka + kb; ++j) {
      g = g.times_linear(i, kQ, j);
      g = g.times_linear(j, kQ1, i);
      g = g.times_linear(j, kQ2m, i);
    }
  }
  return g;
}

// Unit normalization of a (num, den) pair: den shifted to minimal exponent
// zero, primitive over Z, positive leading coefficient.
void normalize_unit(LaurentPoly* num, LaurentPoly* den) {
  Monomial shift = pm(-den->min_exp(Monomial::kS), -den->min_exp(Monomial::kQ2));
  mpz_class g = 0, l = 1;
  for (const auto& t : den->terms()) {
    mpz_class n = t.coeff.numerator(), d = t.coeff.denominator();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  Rational scale(mpq_class(l, g));
  if (den->leading().coeff.sign() < 0) scale = -scale;
  if (scale.is_one() && shift == Monomial{}) return;
  *num = num->times_monomial(shift, scale);
  *den = den->times_monomial(shift, scale);
}

// gcd of a parameter polynomial with the (s, q2)-content of num
LaurentPoly content_gcd(const LaurentPoly& num, LaurentPoly g) {
  std::unordered_map<Monomial, std::vector<Term>, MonomialHash> by_z;
  for (const auto& t : num.terms()) by_z[t.mono.z_part()].push_back({t.mono.param_part(), t.coeff});
  for (auto& [zm, terms] : by_z) {
    if (g.size() == 1) break;
    LaurentPoly c = LaurentPoly::from_terms(0, std::move(terms));
    try {
      exact_div(c, g);
      continue;
    } catch (const InexactDivision&) {
    }
    g = param_gcd(g, c);
  }
  return g;
}

// Reduces num/den by the gcd of den with the content of num.
void reduce_fraction(LaurentPoly* num, LaurentPoly* den) {
  if (num->is_zero()) {
    *den = LaurentPoly::constant(1);
    return;
  }
  if (!den->is_constant()) {
    LaurentPoly g = content_gcd(*num, *den);
    if (g.size() > 1) {
      *num = exact_div(*num, lift(g, num->var_count()));
      *den = exact_div(*den, g);
    }
  }
  normalize_unit(num, den);
}

int degree_of(const LaurentPoly& num, int k) {
  int deg;
  if (!num.z_homogeneous(&deg)) throw Error("shuffle element numerator is not homogeneous");
  return deg - k * (k - 1);
}

}  // namespace

LaurentPoly lift(const LaurentPoly& scalar, int var_count) {
  if (scalar.var_count() == var_count) return scalar;
  return LaurentPoly::from_terms(var_count, scalar.terms());
}

LaurentPoly shift_vars(const LaurentPoly& p, int first, int var_count) {
  std::vector<int> slots(p.var_count());
  std::iota(slots.begin(), slots.end(), first);
  return place(p, slots, var_count);
}

ShuffleElement ShuffleElement::from_parts(int k, const LaurentPoly& num, const LaurentPoly& den) {
  if (num.var_count() != k) throw VarCountMismatch("shuffle element: numerator ring has wrong size");
  if (den.var_count() != 0) throw VarCountMismatch("shuffle element: denominator must be z-free");
  if (den.is_zero()) throw std::domain_error("shuffle element: zero denominator");
  ShuffleElement e;
  e.k_ = k;
  e.num_ = num;
  e.den_ = den;
  e.d_ = num.is_zero() ? 0 : degree_of(num, k);
  e.canonicalize();
  return e;
}

ShuffleElement ShuffleElement::zero(int k, int d) {
  ShuffleElement e;
  e.k_ = k;
  e.d_ = d;
  e.num_ = LaurentPoly(k);
  return e;
}

void ShuffleElement::canonicalize() { reduce_fraction(&num_, &den_); }

ShuffleElement ShuffleElement::operator-() const {
  ShuffleElement r = *this;
  r.num_ = -r.num_;
  return r;
}

namespace {
void check_compatible(const ShuffleElement& a, const ShuffleElement& b) {
  if (a.k() != b.k()) throw VarCountMismatch("shuffle elements with different variable counts");
  if (!a.is_zero() && !b.is_zero() && a.d() != b.d()) throw Error("adding shuffle elements of different degrees");
}
}  // namespace

ShuffleElement operator+(const ShuffleElement& a, const ShuffleElement& b) {
  check_compatible(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  ShuffleElement r;
  r.k_ = a.k_;
  r.d_ = a.d_;
  if (a.den_ == b.den_) {
    r.num_ = a.num_ + b.num_;
    r.den_ = a.den_;
  } else {
    r.num_ = a.num_ * lift(b.den_, a.k_) + b.num_ * lift(a.den_, a.k_);
    r.den_ = a.den_ * b.den_;
  }
  if (r.num_.is_zero()) return ShuffleElement::zero(a.k_, a.d_);
  r.canonicalize();
  return r;
}

ShuffleElement operator-(const ShuffleElement& a, const ShuffleElement& b) { return a + (-b); }

ShuffleElement operator*(const ParamScalar& c, const ShuffleElement& a) {
  if (c.is_zero() || a.is_zero()) return ShuffleElement::zero(a.k_, a.d_);
  ShuffleElement r;
  r.k_ = a.k_;
  r.d_ = a.d_;
  // a and c are both reduced, so only the cross gcds can cancel
  LaurentPoly g1 = param_gcd(a.den_, c.num());
  LaurentPoly g2 = c.den().is_constant() ? c.den() : content_gcd(a.num_, c.den());
  LaurentPoly cn = g1.size() > 1 ? exact_div(c.num(), g1) : c.num();
  LaurentPoly ad = g1.size() > 1 ? exact_div(a.den_, g1) : a.den_;
  LaurentPoly an = g2.size() > 1 ? exact_div(a.num_, lift(g2, a.k_)) : a.num_;
  LaurentPoly cd = g2.size() > 1 ? exact_div(c.den(), g2) : c.den();
  r.num_ = cn.is_constant() ? an.times_monomial(cn.leading().mono, cn.leading().coeff) : an * lift(cn, a.k_);
  r.den_ = ad * cd;
  normalize_unit(&r.num_, &r.den_);
  return r;
}

bool operator==(const ShuffleElement& a, const ShuffleElement& b) {
  if (a.k_ != b.k_) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.d_ != b.d_) return false;
  // reduced and unit-normalized fractions are unique
  return a.den_ == b.den_ && a.num_ == b.num_;
}

std::string ShuffleElement::str() const {
  return "k=" + std::to_string(k_) + " d=" + std::to_string(d_) + "\n" + num_.str() + "\n" + den_.str() + "\n";
}

ShuffleElement ShuffleElement::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header, num, den;
  if (!std::getline(in, header) || !std::getline(in, num) || !std::getline(in, den))
    throw ParseError("shuffle element: expected three lines");
  int k, d;
  if (std::sscanf(header.c_str(), "k=%d d=%d", &k, &d) != 2) throw ParseError("shuffle element: bad header");
  LaurentPoly n = LaurentPoly::parse(num, k);
  if (n.is_zero()) return zero(k, d);
  ShuffleElement e = from_parts(k, n, LaurentPoly::parse(den, 0));
  if (e.d_ != d) throw ParseError("shuffle element: header degree disagrees with numerator");
  return e;
}

bool is_symmetric(const LaurentPoly& num, int k, std::string* failure) {
  if (k < 2) return true;
  std::vector<int> swap(k), cycle(k);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (int i = 0; i < k; ++i) cycle[i] = (i + 1) % k;
  if (num.permuted(swap) != num) {
    if (failure) *failure = "not invariant under z1 <-> z2";
    return false;
  }
  if (k > 2 && num.permuted(cycle) != num) {
    if (failure) *failure = "not invariant under the cycle z_i -> z_{i+1}";
    return false;
  }
  return true;
}

bool wheel_check(const LaurentPoly& num, int k, std::string* failure) {
  if (k < 3) return true;
  const struct {
    Monomial second;
    const char* name;
  } cases[] = {{kQ1, "(z1,z2,z3) = (q w, q1 w, w)"}, {kQ2m, "(z1,z2,z3) = (q w, q2 w, w)"}};
  for (const auto& c : cases) {
    std::vector<Monomial> img(k);
    for (int i = 0; i < k; ++i) img[i] = Monomial::z(i);
    img[0] = kQ + Monomial::z(2);
    img[1] = c.second + Monomial::z(2);
    if (!num.substitute(img, k).is_zero()) {
      if (failure) *failure = std::string("numerator does not vanish at ") + c.name;
      return false;
    }
  }
  return true;
}

ShuffleElement make_element(int k, const LaurentPoly& num, const ParamScalar& den) {
  std::string why;
  if (!is_symmetric(num, k, &why)) throw SymmetryViolation(why);
  if (!wheel_check(num, k, &why)) throw WheelViolation(why);
  // num / den with den = den.num / den.den
  return ShuffleElement::from_parts(k, num * lift(den.den(), k), den.num());
}

LaurentPoly shuffle_blocks(const LaurentPoly& joint, int first, int ka, int kb) {
  LaurentPoly h = joint.times_monomial(staircase(first, ka) + staircase(first + ka, kb));
  h = dominant_part(h, first, ka);
  h = dominant_part(h, first + ka, kb);
  LaurentPoly cross = times_cross(LaurentPoly::constant(1, joint.var_count()), first, ka, kb);
  return schur_expand(dominant_product(h, cross, first, ka + kb), first, ka + kb);
}

ShuffleElement shuffle_mul(const ShuffleElement& a, const ShuffleElement& b) {
  const int k = a.k() + b.k();
  if (k > kMaxZ) throw ResourceLimit("shuffle product exceeds the supported variable count");
  const int d = a.d() + b.d();
  if (a.is_zero() || b.is_zero()) return ShuffleElement::zero(k, d);
  LaurentPoly joint = shift_vars(a.num(), 0, k) * shift_vars(b.num(), a.k(), k);
  return ShuffleElement::from_parts(k, shuffle_blocks(joint, 0, a.k(), b.k()), a.den() * b.den());
}

ShuffleElement shuffle_mul_serial(const ShuffleElement& a, const ShuffleElement& b) {
  const int ka = a.k(), kb = b.k(), k = ka + kb;
  if (k > kMaxZ) throw ResourceLimit("shuffle product exceeds the supported variable count");
  if (a.is_zero() || b.is_zero()) return ShuffleElement::zero(k, a.d() + b.d());
  // Each coset A (|A| = ka) contributes
  //   p_a(z_A) p_b(z_B) prod_{A x B} (z_i - q z_j)(z_j - q1 z_i)(z_j - q2 z_i) / (z_i - z_j),
  // brought over the common denominator V = prod_{i<j} (z_i - z_j).
  std::vector<int> mask(k, 0);
  std::fill(mask.begin() + ka, mask.end(), 1);
  LaurentPoly total(k);
  do {
    std::vector<int> A, B;
    for (int i = 0; i < k; ++i) (mask[i] ? B : A).push_back(i);
    LaurentPoly term = place(a.num(), A, k) * place(b.num(), B, k);
    int sign = 1;
    for (int i : A) {
      for (int j : B) {
        term = term.times_linear(i, kQ, j).times_linear(j, kQ1, i).times_linear(j, kQ2m, i);
        if (i > j) sign = -sign;
      }
    }
    for (std::size_t x = 0; x < A.size(); ++x)
      for (std::size_t y = x + 1; y < A.size(); ++y) term = term.times_linear(A[x], Monomial{}, A[y]);
    for (std::size_t x = 0; x < B.size(); ++x)
      for (std::size_t y = x + 1; y < B.size(); ++y) term = term.times_linear(B[x], Monomial{}, B[y]);
    total = sign > 0 ? total + term : total - term;
  } while (std::next_permutation(mask.begin(), mask.end()));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) total = divide_by_difference(total, i, j);
  return ShuffleElement::from_parts(k, total, a.den() * b.den());
}

ShuffleElement commutator(const ShuffleElement& a, const ShuffleElement& b) {
  return shuffle_mul(a, b) - shuffle_mul(b, a);
}

std::vector<int> xi_profile(const ShuffleElement& p) {
  const int k = p.k();
  std::vector<int> out(k + 1, kNoDegree);
  if (p.is_zero()) return out;
  for (int i = 0; i <= k; ++i) out[i] = p.num().max_degree(0, i) - i * (i - 1) - 2 * i * (k - i);
  return out;
}

bool has_slope_at_most(const ShuffleElement& p, const Rational& mu) {
  if (p.is_zero()) return true;
  auto prof = xi_profile(p);
  for (int i = 1; i <= p.k(); ++i)
    if (mu * Rational(i) < Rational(prof[i])) return false;
  return true;
}

bool is_minimal(const ShuffleElement& p) {
  if (p.is_zero()) return false;
  auto prof = xi_profile(p);
  const int k = p.k();
  for (int i = 1; i < k; ++i)
    if (static_cast<long>(k) * prof[i] >= static_cast<long>(p.d()) * i) return false;
  return true;
}

TensorElement TensorElement::pure(const ShuffleElement& left, const ShuffleElement& right, int h0_pow) {
  const int k = left.k() + right.k();
  TensorElement t;
  t.left_k = left.k();
  t.right_k = right.k();
  t.left_d = left.d();
  t.right_d = right.d();
  t.h0_pow = h0_pow;
  t.joint_num = shift_vars(left.num(), 0, k) * shift_vars(right.num(), left.k(), k);
  t.den = left.den() * right.den();
  reduce_fraction(&t.joint_num, &t.den);
  return t;
}

std::string TensorElement::str() const {
  std::ostringstream out;
  out << "h0^" << h0_pow << " [" << left_k << "," << left_d << " | " << right_k << "," << right_d << "]\n"
      << joint_num.str() << "\n"
      << den.str() << "\n";
  return out.str();
}

namespace {
void check_tensor_shape(const TensorElement& a, const TensorElement& b) {
  if (a.left_k != b.left_k || a.right_k != b.right_k || a.h0_pow != b.h0_pow)
    throw Error("tensor elements with different shapes");
}
}  // namespace

TensorElement operator+(const TensorElement& a, const TensorElement& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  check_tensor_shape(a, b);
  TensorElement r = a;
  const int k = a.left_k + a.right_k;
  if (a.den == b.den) {
    r.joint_num = a.joint_num + b.joint_num;
  } else {
    r.joint_num = a.joint_num * lift(b.den, k) + b.joint_num * lift(a.den, k);
    r.den = a.den * b.den;
  }
  reduce_fraction(&r.joint_num, &r.den);
  return r;
}

TensorElement operator*(const ParamScalar& c, const TensorElement& a) {
  TensorElement r = a;
  const int k = a.left_k + a.right_k;
  r.joint_num = a.joint_num * lift(c.num(), k);
  r.den = a.den * c.den();
  reduce_fraction(&r.joint_num, &r.den);
  return r;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.left_k != b.left_k || a.right_k != b.right_k || a.h0_pow != b.h0_pow) return false;
  const int k = a.left_k + a.right_k;
  return a.joint_num * lift(b.den, k) == b.joint_num * lift(a.den, k);
}

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) {
  const int l1 = a.left_k, r1 = a.right_k, l2 = b.left_k, r2 = b.right_k;
  const int k = l1 + l2 + r1 + r2;
  if (k > kMaxZ) throw ResourceLimit("tensor product exceeds the supported variable count");
  TensorElement t;
  t.left_k = l1 + l2;
  t.right_k = r1 + r2;
  t.left_d = a.left_d + b.left_d;
  t.right_d = a.right_d + b.right_d;
  t.h0_pow = a.h0_pow + b.h0_pow;
  t.joint_num = LaurentPoly(k);
  if (a.is_zero() || b.is_zero()) return t;
  std::vector<int> sa, sb;
  for (int i = 0; i < l1; ++i) sa.push_back(i);
  for (int i = 0; i < r1; ++i) sa.push_back(l1 + l2 + i);
  for (int i = 0; i < l2; ++i) sb.push_back(l1 + i);
  for (int i = 0; i < r2; ++i) sb.push_back(l1 + l2 + r1 + i);
  LaurentPoly joint = place(a.joint_num, sa, k) * place(b.joint_num, sb, k);
  joint = shuffle_blocks(joint, 0, l1, l2);
  joint = shuffle_blocks(joint, l1 + l2, r1, r2);
  t.joint_num = std::move(joint);
  t.den = a.den * b.den;
  reduce_fraction(&t.joint_num, &t.den);
  return t;
}

std::optional<TensorElement> scaling_limit(const ShuffleElement& p, int i, const Rational& mu) {
  const int k = p.k();
  if (i < 0 || i > k) throw Error("scaling_limit: split index out of range");
  if (p.is_zero()) return std::nullopt;
  const int r = k - i;
  // By symmetry the growth from scaling the last r variables equals the
  // profile entry for the first r.
  const int gap = xi_profile(p)[r];
  const Rational target = mu * Rational(r);
  if (target < Rational(gap)) {
    throw SlopeExceeded("scaling limit diverges: growth " + std::to_string(gap) + " exceeds " + target.str());
  }
  if (Rational(gap) < target) return std::nullopt;
  const int top = p.num().max_degree(i, r);
  LaurentPoly joint = p.num().part_with_degree(i, r, top);
  Monomial factor = pm(-2 * i * r, -i * r);
  for (int b = i; b < k; ++b) factor.set(Monomial::z_slot(b), -2 * i);
  TensorElement t;
  t.left_k = i;
  t.right_k = r;
  t.h0_pow = r;
  t.joint_num = joint.times_monomial(factor);
  t.den = p.den();
  t.left_d = t.joint_num.max_degree(0, i) - i * (i - 1);
  t.right_d = t.joint_num.max_degree(i, r) - r * (r - 1);
  reduce_fraction(&t.joint_num, &t.den);
  return t;
}

}  // namespace shuffle
