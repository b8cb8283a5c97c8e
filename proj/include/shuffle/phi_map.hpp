#ifndef SHUFFLE_PHI_MAP_HPP
#define SHUFFLE_PHI_MAP_HPP

#include <cstdint>

#include "shuffle/generators.hpp"
#include "shuffle/param_scalar.hpp"
#include "shuffle/report.hpp"
#include "shuffle/shuffle_element.hpp"

namespace shuffle {

// [P prod_{i!=j} (z_i - q1 z_j) / (z_i - z_j)] at z_i = q1^-i, times
// q1^{(-k^2 + kd + d + 2k)/2} (1 - q2)^-k prod_i (q1^{i-1} - q2) / (q1^i - 1).
// Throws AccidentalPole if a denominator vanishes at the point.
ParamScalar phi(const ShuffleElement& p);

// 1 / (q1^{n/2} - q1^{-n/2})
ParamScalar phi_of_P(int n);
// q1^{n/2 - ones} / ((q1 - 1)^k (1 - q2)^{k-1})
ParamScalar phi_of_X(const EpsilonVector& e);

// phi(P * Q) = phi(P) phi(Q) q1^{(l d - k e)/2} on random word elements.
Report fry_suite(int pairs, int max_k, std::uint32_t seed);
// phi(P_{k,d}) on k <= max_k, |d| <= max_d, plus the given extra points.
Report phi_P_suite(int max_k, int max_d, const std::vector<std::pair<int, int>>& extra = {});
// phi(X^eps) for every eps of length n - 1, n <= n_max, on ray (a, b).
Report phi_X_suite(int a, int b, int n_max);
// phi(Q_{k,d}) = (q2 - 1)(q^-1 - 1)(q1^{n/2} - q1^{-n/2}) / (1 - q1^-1) along a ray.
Report phi_Q_suite(int a, int b, int n_max);

}  // namespace shuffle

#endif  // SHUFFLE_PHI_MAP_HPP
