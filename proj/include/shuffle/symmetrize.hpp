#ifndef SHUFFLE_SYMMETRIZE_HPP
#define SHUFFLE_SYMMETRIZE_HPP

#include "shuffle/laurent_poly.hpp"

namespace shuffle {

// Symmetrization kernels over the variable block z_first .. z_{first+n-1}.
//
// For a polynomial g, alt(g) = sum over permutations s of the block of
// sign(s) * s(g), and V = prod_{i<j} (z_i - z_j) over the block. The
// quotient alt(g) / V is symmetric in the block and is what every builder
// in the library needs.

// Sorts each term's block exponents into strictly decreasing order (with the
// sign of the sorting permutation) and drops terms with a repeated exponent.
// The result determines alt(g) uniquely and is typically n! times smaller.
LaurentPoly dominant_part(const LaurentPoly& g, int first, int n);
LaurentPoly dominant_part_serial(const LaurentPoly& g, int first, int n);

// dominant_part(a * b), sorting each product term as it is formed so the
// full product is never held in memory.
LaurentPoly dominant_product(const LaurentPoly& a, const LaurentPoly& b, int first, int n);

// alt(dom) / V for a dominant-form input, via Kostka-number expansion of
// the Schur functions a_{lambda+delta} / a_delta.
LaurentPoly schur_expand(const LaurentPoly& dom, int first, int n);

// alt(g) / V. The parallel version composes the two kernels above; the
// serial reference expands alt(g) term by term and divides by each
// difference (z_i - z_j) in turn.
LaurentPoly alternant_quotient(const LaurentPoly& g, int first, int n);
LaurentPoly alternant_quotient_serial(const LaurentPoly& g, int first, int n);

// prod_{i<j} (z_i - z_j) over the block, in a ring of var_count variables.
LaurentPoly vandermonde(int var_count, int first, int n);

// z_first^{n-1} z_{first+1}^{n-2} ... z_{first+n-1}^0
Monomial staircase(int first, int n);

}  // namespace shuffle

#endif  // SHUFFLE_SYMMETRIZE_HPP
