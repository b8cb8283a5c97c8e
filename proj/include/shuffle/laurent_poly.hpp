#ifndef SHUFFLE_LAURENT_POLY_HPP
#define SHUFFLE_LAURENT_POLY_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shuffle/monomial.hpp"
#include "shuffle/rational.hpp"

namespace shuffle {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Sparse Laurent polynomial in s, q2 (with s^2 = q1) and z1..zk over Q.
// Terms are kept sorted ascending in the monomial order with no zero
// coefficients, so two polynomials are equal iff their term vectors are.
// Values are immutable; every operation returns a new polynomial.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(int var_count);

  static LaurentPoly constant(const Rational& c, int var_count = 0);
  static LaurentPoly monomial(Monomial m, const Rational& c, int var_count);
  // Parameter monomial s^a q2^b.
  static LaurentPoly param(int s_exp, int q2_exp, const Rational& c = 1);
  // Single variable z_i (0-based) in a ring of var_count variables.
  static LaurentPoly z(int i, int var_count, int exp = 1);
  // Sorts, merges duplicates and drops zeros.
  static LaurentPoly from_terms(int var_count, std::vector<Term> terms);

  int var_count() const noexcept { return var_count_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Term& leading() const { return terms_.back(); }
  const Term& trailing() const { return terms_.front(); }
  bool is_constant() const noexcept;
  bool z_free() const noexcept;
  // Coefficient of the given monomial (zero when absent).
  Rational coeff(Monomial m) const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const Rational& c);
  friend LaurentPoly operator*(const Rational& c, const LaurentPoly& a) { return a * c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly times_monomial(Monomial m, const Rational& c = 1) const;
  // this * (c1*m1 + c2*m2), by merging two shifted copies.
  LaurentPoly times_binomial(Monomial m1, const Rational& c1, Monomial m2, const Rational& c2) const;
  // this * (z_i - param * z_j) for a parameter monomial.
  LaurentPoly times_linear(int i, Monomial param, int j) const;
  LaurentPoly pow(int n) const;

  // Variable relabeling z_i -> z_{perm[i]}; perm is a permutation of the
  // slots 0..var_count-1 (or of the first perm.size() slots).
  LaurentPoly permuted(std::span<const int> perm) const;
  // Monomial substitution z_i -> images[i] (a Laurent monomial of the
  // target ring, possibly carrying s, q2 factors).
  LaurentPoly substitute(std::span<const Monomial> images, int new_var_count) const;
  LaurentPoly with_var_count(int k) const;
  // Specialize s and q2 to rational values.
  LaurentPoly specialize_params(const Rational& s, const Rational& q2) const;

  // Max / min total degree in the variables z_first..z_{first+count-1}.
  int max_degree(int first, int count) const;
  int min_degree(int first, int count) const;
  // Terms whose partial degree in the given variables equals deg.
  LaurentPoly part_with_degree(int first, int count, int deg) const;
  // Per-slot exponent bounds; valid only for nonzero polynomials.
  int max_exp(int slot) const;
  int min_exp(int slot) const;
  // True iff all terms share one total z-degree (stored in *degree).
  bool z_homogeneous(int* degree) const;

  // Canonical text: terms ascending, `c * s^a q2^b z1^c1 ...` joined by " + ".
  std::string str() const;
  static LaurentPoly parse(std::string_view text, int var_count);

 private:
  int var_count_ = 0;
  std::vector<Term> terms_;

  friend class PolyBuilder;
  friend LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly divide_by_difference(const LaurentPoly& a, int i, int j);
};

// Exact quotient a / b. Throws InexactDivision on a nonzero remainder.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
// Exact quotient a / (z_i - z_j); linear-time specialization.
LaurentPoly divide_by_difference(const LaurentPoly& a, int i, int j);

// s^a q2^b as a monomial, and z-free constant helpers.
inline Monomial pm(int s_exp, int q2_exp) { return Monomial::params(s_exp, q2_exp); }

std::string monomial_str(Monomial m, int var_count);

}  // namespace shuffle

#endif  // SHUFFLE_LAURENT_POLY_HPP
