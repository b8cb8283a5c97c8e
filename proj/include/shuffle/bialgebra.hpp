#ifndef SHUFFLE_BIALGEBRA_HPP
#define SHUFFLE_BIALGEBRA_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shuffle/generators.hpp"
#include "shuffle/lattice.hpp"
#include "shuffle/param_scalar.hpp"
#include "shuffle/report.hpp"
#include "shuffle/shuffle_element.hpp"

namespace shuffle {

// Omega(x) = exp(-sum alpha_n x^-n); entry j is the coefficient of x^-j.
std::vector<ParamScalar> omega_big_series(int order);
// Same coefficients from (x - q^-1)(x - q1)(x - q2) / ((x - q)(x - q1^-1)(x - q2^-1)).
std::vector<ParamScalar> omega_rational_series(int order);

// Exponents of h_0, h_1, ...; h_0 may carry a negative power. Trailing
// zeros are trimmed, so the empty vector is 1.
using HMonomial = std::vector<int>;
HMonomial h_mul(const HMonomial& a, const HMonomial& b);
// sum_n n e_n
int h_degree(const HMonomial& h);
// Only h_0 (with any exponent) occurs.
bool h_is_h0_power(const HMonomial& h);
std::string h_str(const HMonomial& h);

// Tensor factor shapes of one term. Factor f owns the z variables
// [sum_{g<f} ks[g], .. + ks[f]); ds[f] is the numerator-form degree of its
// payload, h[f] the h-monomial standing to the left of it.
struct HKey {
  std::vector<HMonomial> h;
  std::vector<int> ks;
  std::vector<int> ds;

  friend bool operator<(const HKey& a, const HKey& b) {
    if (a.ks != b.ks) return a.ks < b.ks;
    if (a.ds != b.ds) return a.ds < b.ds;
    return a.h < b.h;
  }
  friend bool operator==(const HKey& a, const HKey& b) { return a.ks == b.ks && a.ds == b.ds && a.h == b.h; }
  // h-inclusive degree of factor f
  int degree(int f) const { return ds[f] + h_degree(h[f]); }
  std::string str() const;
};

// joint / den, each factor over its own canonical shuffle denominator.
struct HPayload {
  LaurentPoly joint;
  LaurentPoly den = LaurentPoly::constant(1);
};

// Finite sum of h-monomials times shuffle payloads in an f-fold tensor
// power of A^>=, every term in h-left normal form.
class HSeriesElement {
 public:
  explicit HSeriesElement(int factors = 1, int window = 0) : factors_(factors), window_(window) {}
  static HSeriesElement from_element(const ShuffleElement& p, const HMonomial& h = {}, int window = 0);

  int factors() const noexcept { return factors_; }
  int window() const noexcept { return window_; }
  const std::map<HKey, HPayload>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const HKey& key, const LaurentPoly& joint, const LaurentPoly& den);
  HSeriesElement filtered(const std::function<bool(const HKey&)>& keep) const;

  friend HSeriesElement operator+(const HSeriesElement& a, const HSeriesElement& b);
  friend HSeriesElement operator-(const HSeriesElement& a, const HSeriesElement& b);
  friend HSeriesElement operator*(const ParamScalar& c, const HSeriesElement& a);
  friend bool operator==(const HSeriesElement& a, const HSeriesElement& b);
  friend bool operator!=(const HSeriesElement& a, const HSeriesElement& b) { return !(a == b); }

  std::string str() const;

 private:
  int factors_;
  int window_;
  std::map<HKey, HPayload> terms_;
};

// Coefficient of w^-j in prod_i Omega(w / z_i) over the variables
// [first, first + count) of a var_count ring.
LaurentPoly omega_product_coefficient(int j, int first, int count, int var_count);

// P * h in h-left normal form, using P h(w) = h(w) P prod Omega(w / z_i).
// Throws WindowExceeded when h uses an index above window.
HSeriesElement normal_order(const HMonomial& h, const ShuffleElement& p, int window);
// Product in the f-fold tensor power, factor by factor, with normal ordering.
HSeriesElement hseries_mul(const HSeriesElement& a, const HSeriesElement& b);
// [p_n, P], with p_n read off from h(w) = h_0 exp(sum alpha_m p_m w^-m).
HSeriesElement hecke_commutator(int n, const ShuffleElement& p, int window);

// Components i = 0..k of the slope-mu coproduct (nullopt for vanishing ones).
std::vector<std::optional<TensorElement>> delta_mu(const ShuffleElement& p, const Rational& mu);

// Components of Delta(P) whose second factor, of k2 variables, has degree at
// least min_d2(k2).
HSeriesElement delta_expand(const ShuffleElement& p, const std::function<int(int)>& min_d2, int window = 0);
// min_d2(k2) = floor(d k2 / k) - window
HSeriesElement delta_truncated(const ShuffleElement& p, int window);
// Highest second-factor degree Delta(P) reaches with k2 variables there.
int delta_top_degree(const ShuffleElement& p, int k2);
// Delta applied to tensor factor f of every term; min_right(term key, k of
// the new right piece) bounds the new right factor's h-inclusive degree.
HSeriesElement apply_delta(const HSeriesElement& x, int f, const std::function<int(const HKey&, int)>& min_right);
// Keeps the terms of a tensor in the standard window: every tail of factors
// f..last has h-inclusive degree >= floor(d k_tail / k) - window.
HSeriesElement truncate_tail(const HSeriesElement& x, int k, int d, int window);

// (1 / alpha_1^k) times the normal-ordered integral of w against P.
ParamScalar pair_word_element(const WordExpression& w, const ShuffleElement& p);
ParamScalar pair_word_element_serial(const WordExpression& w, const ShuffleElement& p);
// Pairs words factor by factor with the h_0-only terms of x; h_n with n >= 1
// pairs to zero against the shuffle algebra.
ParamScalar pair_words_tensor(const std::vector<WordExpression>& words, const HSeriesElement& x);

// Word form of P_C from the recursive construction, in product order.
WordExpression collection_word(const Collection& c);
// prod 1 / alpha_gcd(k_i, d_i)
ParamScalar ortho_value(const Collection& c);
// prod (-1)^(k_i - 1) / alpha_gcd(k_i, d_i), times m! for every run of m equal parts
ParamScalar hopf_ortho_value(const Collection& c);

// kStated: products in increasing slope order, diagonal ortho_value.
// kHopf: products in decreasing slope order, the order in which the pairing
// (a * b, c) = (b (x) a, Delta(c)) makes the basis orthogonal; diagonal
// hopf_ortho_value.
enum class GramConvention { kStated, kHopf };

struct GramMatrix {
  std::vector<Collection> collections;  // in the product order used
  std::vector<std::vector<ParamScalar>> entries;  // (P_{C_i}, P_{C_j})
};
GramMatrix gram_matrix(const std::vector<Collection>& cs, GramConvention conv = GramConvention::kStated);
Report gram_check(const std::vector<Collection>& cs, GramConvention conv = GramConvention::kStated);

// Verification suites.
Report pairing_suite();
Report gram_suite(GramConvention conv);
Report bialgebra_property_suite(int window);
Report primitivity_suite(int max_k, int max_d);
Report expdelta_suite(int a, int b, int n_max);
Report multiplicativity_suite(int window);
Report coassociativity_suite(int window);
Report hecke_suite(int window);
Report quasi_empty_component_suite(int window);
Report delta_consistency_suite(int window);

}  // namespace shuffle

#endif  // SHUFFLE_BIALGEBRA_HPP
