#ifndef SHUFFLE_SYMFUNC_HPP
#define SHUFFLE_SYMFUNC_HPP

#include <map>
#include <string>
#include <vector>

#include "shuffle/laurent_poly.hpp"
#include "shuffle/param_scalar.hpp"
#include "shuffle/report.hpp"
#include "shuffle/shuffle_element.hpp"

namespace shuffle {

// Linear combination of ribbon Schur functions s_eps. A ribbon is a binary
// string of moves from a box in the leftmost column: '0' goes down, '1'
// goes right. The empty string is the single box, and s_eps has degree
// |eps| + 1.
class RibbonExpr {
 public:
  RibbonExpr() = default;
  static RibbonExpr ribbon(const std::string& eps, const ParamScalar& c = 1);

  const std::map<std::string, ParamScalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  // -1 for the zero expression
  int degree() const noexcept { return degree_; }

  // Throws Error when the degrees differ.
  void add(const std::string& eps, const ParamScalar& c);

  friend RibbonExpr operator+(const RibbonExpr& a, const RibbonExpr& b);
  friend RibbonExpr operator-(const RibbonExpr& a, const RibbonExpr& b);
  friend RibbonExpr operator*(const ParamScalar& c, const RibbonExpr& a);
  friend bool operator==(const RibbonExpr& a, const RibbonExpr& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  std::map<std::string, ParamScalar> terms_;
  int degree_ = -1;
};

// s_eps s_eps' = s_{eps 0 eps'} + s_{eps 1 eps'}, extended bilinearly.
RibbonExpr ribbon_mul(const std::string& e, const std::string& f);
RibbonExpr ribbon_mul(const RibbonExpr& a, const RibbonExpr& b);

// p_n = sum_r (-1)^{n-1-r} s_{0^{n-1-r} 1^r}. Throws Error for n < 1.
RibbonExpr hook_powersum(int n);

// Row lengths of the ribbon, top to bottom.
std::vector<int> ribbon_rows(const std::string& eps);
// s_eps in the variables z_1..z_vars, through the alternating sum of h over
// coarsenings of the row composition.
LaurentPoly ribbon_polynomial(const std::string& eps, int vars);
LaurentPoly expr_polynomial(const RibbonExpr& e, int vars);
LaurentPoly power_sum_polynomial(int n, int vars);

// s_eps -> (-q)^{#ones} X^eps on the ray (a, b).
ShuffleElement visa_image(const RibbonExpr& e, int a, int b);
// The image of p_n: (-1)^{n-1} (q1^n - 1)(1 - q2^n) / ((q1 - 1)^{na} (1 - q2)^{na}) P_{na,nb}.
ParamScalar isom_constant(int n, int a);

// Ribbon-side rules checked as polynomial identities in enough variables,
// for total degree up to n_max.
Report ribbon_rule_suite(int n_max);
// Intertwining of products for total degree <= n_max and the power-sum
// image for n <= n_max, on the ray (a, b).
Report check_visa(int a, int b, int n_max);

}  // namespace shuffle

#endif  // SHUFFLE_SYMFUNC_HPP
