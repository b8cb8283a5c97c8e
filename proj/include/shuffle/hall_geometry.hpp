#ifndef SHUFFLE_HALL_GEOMETRY_HPP
#define SHUFFLE_HALL_GEOMETRY_HPP

#include <utility>
#include <vector>

#include "shuffle/lattice.hpp"
#include "shuffle/rational.hpp"
#include "shuffle/report.hpp"
#include "shuffle/shuffle_element.hpp"

namespace shuffle {

using Bidegree = std::pair<int, int>;

// [P_{p1}, P_{p2}] = 0 for collinear p1, p2.
CheckLine verify_relation0(Bidegree p1, Bidegree p2);
// alpha_1 [P_{k1,d1}, P_{k2,d2}] = theta_{k,d} on an empty or quasi-empty
// triangle, theta taken along the ray of (k, d).
CheckLine verify_relation(const LatticeTriangle& t);

// Unordered collections {(k_i, d_i)} with k_i >= 1, summing to (k, d), with
// d_i <= mu k_i. Parts are listed in product order (slope_less).
std::vector<Collection> enumerate_collections(int k, int d, const Rational& mu);
long count_collections(int k, int d, const Rational& mu);

// P_{k_1,d_1} * ... * P_{k_t,d_t} in the listed order.
ShuffleElement collection_product(const Collection& c);

// Rank of the span of the P_C, C of slope <= mu, over Q(s, q2). Throws
// ResourceLimit when k exceeds max_k.
int basis_rank(int k, int d, const Rational& mu, int max_k = 4);

// Rank of a family of elements in one bidegree: an exact rank at a
// rational specialization of (s, q2), confirmed symbolically when it falls
// short of the family size.
int element_rank(const std::vector<ShuffleElement>& elems);

// Relation checks on every collinear pair and every empty or quasi-empty
// triangle with total k <= max_k and |d_i| <= max_d.
Report hall_suite(int max_k, int max_d);

}  // namespace shuffle

#endif  // SHUFFLE_HALL_GEOMETRY_HPP
