#ifndef SHUFFLE_SUITES_HPP
#define SHUFFLE_SUITES_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "shuffle/report.hpp"

namespace shuffle {

using Grid = std::vector<std::pair<int, int>>;

// k <= max_k, |d| <= max_d, then the extra points.
Grid make_grid(int max_k, int max_d, const Grid& extra = {});
// k <= 4, |d| <= 5 plus (5, +-1), (5, +-2)
Grid standard_grid();

// build_P against the commutator construction. When canon is given, the
// canonical text of every build_P is appended to it in grid order.
Report main_theorem_suite(const Grid& grid, std::vector<std::string>* canon = nullptr);
Report minimal_suite(const Grid& grid);
// Random products of random word elements, total k <= max_k.
Report wheel_suite(int count, int max_k, std::uint32_t seed);
// Profile subadditivity and the leading-term factorization of scaling
// limits on random pairs with total k <= max_k.
Report slope_suite(int pairs, int max_k, std::uint32_t seed);
// hall_suite plus a coverage line: at least one quasi-empty, non-empty
// triangle and one relation on a ray with gcd 2.
Report hall_coverage_suite(int max_k, int max_d);
// basis_rank = count_collections for k <= max_k, |d| <= max_d, mu in {d/k, 0, 1}.
Report dimension_suite(int max_k, int max_d);
// Canonical outputs of the main-theorem grid across a cold rerun, one
// worker versus many, and the first versus second ranked triangle.
Report determinism_suite(const Grid& grid);

}  // namespace shuffle

#endif  // SHUFFLE_SUITES_HPP
