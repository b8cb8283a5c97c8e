#ifndef SHUFFLE_PARAM_SCALAR_HPP
#define SHUFFLE_PARAM_SCALAR_HPP

#include <string>

#include "shuffle/laurent_poly.hpp"

namespace shuffle {

// Element of Q(s, q2), kept as a reduced fraction of parameter-only Laurent
// polynomials. After every operation the fraction is gcd-reduced and the
// denominator is shifted to nonnegative exponents with minimum zero, made
// primitive over Z and given a positive leading coefficient, so the text
// form is canonical. Equality still goes through cross-multiplication.
class ParamScalar {
 public:
  ParamScalar() : num_(0), den_(LaurentPoly::constant(1)) {}
  ParamScalar(const Rational& c) : num_(LaurentPoly::constant(c)), den_(LaurentPoly::constant(1)) {}  // NOLINT
  ParamScalar(int64_t c) : ParamScalar(Rational(c)) {}                                                // NOLINT
  explicit ParamScalar(const LaurentPoly& num);
  ParamScalar(const LaurentPoly& num, const LaurentPoly& den);

  // s^a q2^b
  static ParamScalar monomial(int s_exp, int q2_exp, const Rational& c = 1);

  const LaurentPoly& num() const noexcept { return num_; }
  const LaurentPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const;

  ParamScalar operator-() const;
  ParamScalar inverse() const;
  ParamScalar pow(int n) const;
  friend ParamScalar operator+(const ParamScalar& a, const ParamScalar& b);
  friend ParamScalar operator-(const ParamScalar& a, const ParamScalar& b);
  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
  friend ParamScalar operator/(const ParamScalar& a, const ParamScalar& b);
  ParamScalar& operator+=(const ParamScalar& o) { return *this = *this + o; }
  ParamScalar& operator-=(const ParamScalar& o) { return *this = *this - o; }
  ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }
  ParamScalar& operator/=(const ParamScalar& o) { return *this = *this / o; }
  friend bool operator==(const ParamScalar& a, const ParamScalar& b);
  friend bool operator!=(const ParamScalar& a, const ParamScalar& b) { return !(a == b); }

  // Value at rational s, q2. Throws std::domain_error at a pole.
  Rational evaluate(const Rational& s, const Rational& q2) const;

  // `num` when the denominator is 1, otherwise `(num) / (den)`.
  std::string str() const;
  static ParamScalar parse(std::string_view text);

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

// gcd in Q[s, q2] of two parameter-only Laurent polynomials, up to a unit
// (a rational multiple of a monomial).
LaurentPoly param_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Common parameter shorthands, all as ParamScalar.
ParamScalar q1_pow(int n);  // q1^n = s^{2n}
ParamScalar q2_pow(int n);
ParamScalar q_pow(int n);  // (q1 q2)^n

}  // namespace shuffle

#endif  // SHUFFLE_PARAM_SCALAR_HPP
