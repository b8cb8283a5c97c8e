#include "shuffle/phi_map.hpp"

#include <random>

#include "shuffle/errors.hpp"
#include "shuffle/lattice.hpp"

namespace shuffle {
namespace {

ParamScalar q1_half(int e) { return ParamScalar::monomial(e, 0); }

std::string bideg(int k, int d) { return "(" + std::to_string(k) + "," + std::to_string(d) + ")"; }

// Sum of a few random words of length k and total degree d, letters within
// one of d/k so the numerators stay small.
WordExpression random_word_element(std::mt19937& rng, int k, int d) {
  std::uniform_int_distribution<int> jitter(-1, 1), coeff(1, 3), count(1, 3);
  WordExpression w;
  for (int t = count(rng); t > 0; --t) {
    std::vector<int> word(k, floor_div(d, k));
    for (int i = 0; i < d - k * floor_div(d, k); ++i) ++word[i];
    for (int i = 0; i + 1 < k; ++i) {
      int j = jitter(rng);
      word[i] += j;
      word[i + 1] -= j;
    }
    w = w + WordExpression::word(word, coeff(rng));
  }
  return w;
}

}  // namespace

ParamScalar phi(const ShuffleElement& p) {
  const int k = p.k(), d = p.d();
  if (k < 1) throw Error("phi: needs k >= 1");
  std::vector<Monomial> point;
  for (int i = 1; i <= k; ++i) point.push_back(pm(-2 * i, 0));
  LaurentPoly num = p.num().substitute(point, 0);
  LaurentPoly den = p.den();
  // the stored Vandermonde square against prod_{i!=j}(z_i - z_j): one sign per unordered pair
  int swaps = 0;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j < i; ++j) ++swaps;
  if (swaps % 2) num = -num;
  // what remains of the canonical denominator is prod_{i!=j}(z_i - q2 z_j)
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      if (i == j) continue;
      LaurentPoly f = LaurentPoly::param(-2 * i, 0) - LaurentPoly::param(-2 * j, 1);
      if (f.is_zero()) throw AccidentalPole("phi: z_i - q2 z_j vanishes at the evaluation point");
      den = den * f;
    }
  const LaurentPoly one = LaurentPoly::constant(1);
  num = num.times_monomial(pm(-k * k + k * d + d + 2 * k, 0));
  for (int i = 1; i <= k; ++i) {
    num = num * (LaurentPoly::param(2 * (i - 1), 0) - LaurentPoly::param(0, 1));
    den = den * (LaurentPoly::param(2 * i, 0) - one) * (one - LaurentPoly::param(0, 1));
  }
  if (den.is_zero()) throw AccidentalPole("phi: vanishing prefactor");
  return ParamScalar(num, den);
}

ParamScalar phi_of_P(int n) { return (q1_half(n) - q1_half(-n)).inverse(); }

ParamScalar phi_of_X(const EpsilonVector& e) {
  const int k = e.k();
  return q1_half(e.n - 2 * e.ones()) / ((q1_pow(1) - 1).pow(k) * (ParamScalar(1) - q2_pow(1)).pow(k - 1));
}

Report fry_suite(int pairs, int max_k, std::uint32_t seed) {
  Report rep;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> deg(-3, 3);
  for (int t = 0; t < pairs; ++t) {
    std::uniform_int_distribution<int> kd(1, max_k - 1);
    const int k = kd(rng);
    std::uniform_int_distribution<int> ld(1, max_k - k);
    const int l = ld(rng), d = deg(rng), e = deg(rng);
    ShuffleElement a = word_to_element(random_word_element(rng, k, d));
    ShuffleElement b = word_to_element(random_word_element(rng, l, e));
    ParamScalar lhs = phi(shuffle_mul(a, b));
    ParamScalar rhs = phi(a) * phi(b) * q1_half(l * d - k * e);
    std::string id = "fry#" + std::to_string(t) + " " + bideg(k, d) + "*" + bideg(l, e);
    rep.add(id, lhs == rhs, lhs == rhs ? "phi " + lhs.str() : "lhs " + lhs.str() + ", rhs " + rhs.str());
  }
  return rep;
}

Report phi_P_suite(int max_k, int max_d, const std::vector<std::pair<int, int>>& extra) {
  std::vector<std::pair<int, int>> grid;
  for (int k = 1; k <= max_k; ++k)
    for (int d = -max_d; d <= max_d; ++d) grid.emplace_back(k, d);
  grid.insert(grid.end(), extra.begin(), extra.end());
  Report rep;
  for (auto [k, d] : grid) {
    ParamScalar got = phi(build_P(k, d)), want = phi_of_P(gcd_abs(k, d));
    rep.add("phi P" + bideg(k, d), got == want, got == want ? got.str() : "got " + got.str() + ", expected " + want.str());
  }
  return rep;
}

Report phi_X_suite(int a, int b, int n_max) {
  Report rep;
  for (int n = 1; n <= n_max; ++n)
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      std::string bits;
      for (int j = n - 2; j >= 0; --j) bits += (mask >> j) & 1 ? '1' : '0';
      EpsilonVector e(a, b, n, bits);
      ParamScalar got = phi(build_X_eps(e)), want = phi_of_X(e);
      rep.add("phi X[" + e.key() + "]", got == want, got == want ? got.str() : "got " + got.str() + ", expected " + want.str());
    }
  return rep;
}

Report phi_Q_suite(int a, int b, int n_max) {
  Report rep;
  ThetaQ tq = build_theta_Q(a, b, n_max);
  for (int n = 1; n <= n_max; ++n) {
    ParamScalar got = phi(tq.Q[n - 1]);
    ParamScalar want = (q2_pow(1) - 1) * (q_pow(-1) - 1) * (q1_half(n) - q1_half(-n)) / (ParamScalar(1) - q1_pow(-1));
    rep.add("phi Q" + bideg(n * a, n * b), got == want, got == want ? got.str() : "got " + got.str() + ", expected " + want.str());
  }
  return rep;
}

}  // namespace shuffle
