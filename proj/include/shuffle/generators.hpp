#ifndef SHUFFLE_GENERATORS_HPP
#define SHUFFLE_GENERATORS_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "shuffle/lattice.hpp"
#include "shuffle/param_scalar.hpp"
#include "shuffle/shuffle_element.hpp"

namespace shuffle {

// (q1^n - 1)(q2^n - 1)(q^-n - 1) / n
ParamScalar alpha(int n);

// Linear combination of words z^{n_1} * ... * z^{n_k}.
class WordExpression {
 public:
  using Word = std::vector<int>;

  WordExpression() = default;
  static WordExpression word(Word w, const ParamScalar& c = 1);

  const std::map<Word, ParamScalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  // False for the zero expression and for mixed bidegrees.
  bool homogeneous(int* k, int* d) const;

  WordExpression operator-() const;
  friend WordExpression operator+(const WordExpression& a, const WordExpression& b);
  friend WordExpression operator-(const WordExpression& a, const WordExpression& b);
  // Concatenation product.
  friend WordExpression operator*(const WordExpression& a, const WordExpression& b);
  friend WordExpression operator*(const ParamScalar& c, const WordExpression& a);
  friend bool operator==(const WordExpression& a, const WordExpression& b) { return a.terms_ == b.terms_; }

  // One `coeff [n1,n2,..]` line per word, in word order.
  std::string str() const;

 private:
  void add(const Word& w, const ParamScalar& c);
  std::map<Word, ParamScalar> terms_;
};

WordExpression bracket(const WordExpression& a, const WordExpression& b);

// Throws Error on the zero or inhomogeneous expression.
ShuffleElement word_to_element(const WordExpression& w);

ShuffleElement build_X(std::span<const int> m);

// Binary string attached to the bidegree (na, nb), gcd(a, b) = 1.
struct EpsilonVector {
  int a = 1;
  int b = 0;
  int n = 1;
  std::string bits;  // length n - 1, characters '0' / '1'

  EpsilonVector() = default;
  EpsilonVector(int a, int b, int n, std::string bits);

  int k() const { return n * a; }
  int d() const { return n * b; }
  // eps_j for j = 0..n, with eps_0 = 1 and eps_n = 0.
  int eps(int j) const;
  int ones() const;
  // floor(i d / k) - eps_{i/a}, the eps term only for i in {a, .., (n-1)a}.
  int S(int i) const;
  // S_j - S_{j-1}, j = 1..k.
  std::vector<int> exponents() const;
  std::string key() const;
};

// 0^r 1^s
std::string hook_bits(int r, int s);

ShuffleElement build_X_eps(const EpsilonVector& e);
// sum_i c_i X^{e_i}, all on the same bidegree, through a single symmetrization.
ShuffleElement build_X_eps_sum(const std::vector<std::pair<EpsilonVector, ParamScalar>>& parts);

ShuffleElement build_P(int k, int d);
// Term-by-term transcription of the closed formula for P_{k,d}, with its
// own pole cancellation and the serial symmetrizer.
ShuffleElement build_P_literal(int k, int d);

struct RecursiveP {
  WordExpression word;
  ShuffleElement element;
};

// Generator built from z^d by commutators along empty triangles. rank picks
// the triangle used at the top level (0 = first in ranked_empty_triangles);
// lower levels always use rank 0. Throws Error when the requested rank does
// not exist.
RecursiveP build_P_recursive(int k, int d, int rank = 0);

struct ThetaQ {
  // index m - 1 holds the bidegree (ma, mb) entry
  std::vector<ShuffleElement> theta;
  std::vector<ShuffleElement> Q;
};

// theta from exp(sum alpha_m x^m P_{ma,mb}); Q from the same series with the
// constant term split off. In the shuffle algebra the two coincide.
ThetaQ build_theta_Q(int a, int b, int n_max);

// Drops in-process memo tables.
void clear_generator_memo();

}  // namespace shuffle

#endif  // SHUFFLE_GENERATORS_HPP
