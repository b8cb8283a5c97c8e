#ifndef SHUFFLE_SHUFFLE_ELEMENT_HPP
#define SHUFFLE_SHUFFLE_ELEMENT_HPP

#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "shuffle/laurent_poly.hpp"
#include "shuffle/param_scalar.hpp"

namespace shuffle {

// An element of the shuffle algebra in numerator form:
//
//   (num / den) * prod_{i<j} (z_i - z_j)^2 / prod_{i!=j} (z_i - q1 z_j)(z_i - q2 z_j)
//
// with num a symmetric Laurent polynomial in z_1..z_k (coefficients in
// s, q2) and den a nonzero polynomial in s, q2 alone. The pair is kept
// reduced (den shares no factor with the content of num) and den is
// normalized up to units, so the text form is canonical.
class ShuffleElement {
 public:
  ShuffleElement() : num_(0), den_(LaurentPoly::constant(1)) {}

  // Trusted constructor: canonicalizes, computes the degree, skips the
  // symmetry and wheel checks.
  static ShuffleElement from_parts(int k, const LaurentPoly& num, const LaurentPoly& den = LaurentPoly::constant(1));
  static ShuffleElement zero(int k, int d);

  int k() const noexcept { return k_; }
  int d() const noexcept { return d_; }
  const LaurentPoly& num() const noexcept { return num_; }
  const LaurentPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  ShuffleElement operator-() const;
  friend ShuffleElement operator+(const ShuffleElement& a, const ShuffleElement& b);
  friend ShuffleElement operator-(const ShuffleElement& a, const ShuffleElement& b);
  friend ShuffleElement operator*(const ParamScalar& c, const ShuffleElement& a);
  friend bool operator==(const ShuffleElement& a, const ShuffleElement& b);
  friend bool operator!=(const ShuffleElement& a, const ShuffleElement& b) { return !(a == b); }

  // Header `k=<k> d=<d>`, then the numerator and denominator lines.
  std::string str() const;
  static ShuffleElement parse(std::string_view text);

 private:
  void canonicalize();

  int k_ = 0;
  int d_ = 0;
  LaurentPoly num_;
  LaurentPoly den_;
};

// Validated constructor. Throws SymmetryViolation or WheelViolation.
ShuffleElement make_element(int k, const LaurentPoly& num, const ParamScalar& den = 1);

bool is_symmetric(const LaurentPoly& num, int k, std::string* failure = nullptr);
// Both wheel specializations (z1,z2,z3) = (q w, q1 w, w), (q w, q2 w, w).
bool wheel_check(const LaurentPoly& num, int k, std::string* failure = nullptr);

ShuffleElement shuffle_mul(const ShuffleElement& a, const ShuffleElement& b);
// Coset-by-coset reference product with a single clearing division.
ShuffleElement shuffle_mul_serial(const ShuffleElement& a, const ShuffleElement& b);
ShuffleElement commutator(const ShuffleElement& a, const ShuffleElement& b);

// Degrees in xi of P(xi z_1, .., xi z_i, z_{i+1}, .., z_k), i = 0..k.
// The zero element has every entry equal to kNoDegree.
inline constexpr int kNoDegree = INT_MIN;
std::vector<int> xi_profile(const ShuffleElement& p);
// entry_i <= mu * i for every i.
bool has_slope_at_most(const ShuffleElement& p, const Rational& mu);
bool is_minimal(const ShuffleElement& p);

// h0^{h0_pow} times an element of A_{left} (x) A_{right}, stored as a joint
// numerator in z_1..z_{left_k} | z_{left_k+1}..z_{left_k+right_k} over the
// two groups' canonical denominators, divided by the scalar den.
struct TensorElement {
  int left_k = 0;
  int right_k = 0;
  int left_d = 0;
  int right_d = 0;
  int h0_pow = 0;
  LaurentPoly joint_num;
  LaurentPoly den = LaurentPoly::constant(1);

  bool is_zero() const { return joint_num.is_zero(); }
  static TensorElement pure(const ShuffleElement& left, const ShuffleElement& right, int h0_pow);
  std::string str() const;
};

TensorElement operator+(const TensorElement& a, const TensorElement& b);
TensorElement operator*(const ParamScalar& c, const TensorElement& a);
bool operator==(const TensorElement& a, const TensorElement& b);
// (A (x) B)(C (x) D) = AC (x) BD, extended to joint numerators.
TensorElement tensor_mul(const TensorElement& a, const TensorElement& b);

// lim_{xi->oo} P(z_1..z_i (x) xi z_{i+1}..xi z_k) / xi^{mu (k-i)}, with
// h0^{k-i}. Returns nullopt for a vanishing limit; throws SlopeExceeded
// when the limit diverges.
std::optional<TensorElement> scaling_limit(const ShuffleElement& p, int i, const Rational& mu);

// Lifts a scalar polynomial into a ring with var_count z variables.
LaurentPoly lift(const LaurentPoly& scalar, int var_count);

// num(P)(z_first..) placed into a ring of var_count variables.
LaurentPoly shift_vars(const LaurentPoly& p, int first, int var_count);

// Shuffle-symmetrizes two numerators living in adjacent blocks
// [first, first+ka) and [first+ka, first+ka+kb) of a common ring: returns
// alt(D_a D_b G) / V, with D the dominant parts and G the cross factor.
LaurentPoly shuffle_blocks(const LaurentPoly& joint, int first, int ka, int kb);

}  // namespace shuffle

#endif  // SHUFFLE_SHUFFLE_ELEMENT_HPP
