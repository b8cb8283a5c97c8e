#ifndef SHUFFLE_POINTWISE_HPP
#define SHUFFLE_POINTWISE_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "shuffle/generators.hpp"
#include "shuffle/rational.hpp"
#include "shuffle/shuffle_element.hpp"

namespace shuffle {

// Exact evaluation at rational points, past the symbolic variable limit.
// A point fixes s (so q1 = s^2), q2 and values for z_1..z_k.
struct EvalPoint {
  Rational s, q2;
  std::vector<Rational> z;

  Rational q1() const { return s * s; }
  Rational q() const { return s * s * q2; }
};

// Distinct small rationals for s, q2 and k variables, away from the
// hyperplanes z_i = c z_j, c in {1, q1, q2, q}.
EvalPoint random_point(std::mt19937& rng, int k);

// A symmetric function of some subset of the point's variables.
using PointFn = std::function<Rational(const EvalPoint&, std::span<const int> vars)>;

Rational eval_omega(const EvalPoint& p, int i, int j);  // omega(z_i / z_j)
Rational eval_scalar(const ParamScalar& c, const EvalPoint& p);
Rational eval_element(const ShuffleElement& e, const EvalPoint& p);

// X_m over the given variables, by dynamic programming over (placed set,
// last variable) rather than the k! permutations. Throws AccidentalPole.
Rational eval_X(std::span<const int> m, const EvalPoint& p, std::span<const int> vars);
PointFn x_fn(const EpsilonVector& e);
PointFn scaled(const ParamScalar& c, PointFn f);
PointFn sum(PointFn f, PointFn g);
// f * g with f of ka variables: sum over ka-subsets A of f(z_A) g(z_B) prod omega(z_a / z_b).
PointFn product(PointFn f, int ka, PointFn g);

}  // namespace shuffle

#endif  // SHUFFLE_POINTWISE_HPP
