#ifndef SHUFFLE_X_IDENTITIES_HPP
#define SHUFFLE_X_IDENTITIES_HPP

#include <cstdint>

#include "shuffle/report.hpp"

namespace shuffle {

// Identities among X elements on a ray (a, b). Cases within the symbolic
// variable limit compare elements exactly; larger ones are compared by exact
// evaluation at `points` seeded random rational points, and say so.

// X^(0^{t-1}) - q^{t-1} X^(1^{t-1}) = sum_{r+s=t-2} q^s X^(0^r) * X^(1^s), 2 <= t <= t_max.
Report id1_suite(int a, int b, int t_max, int points = 3, std::uint32_t seed = 1);

// X_e * X_f = X_(e0f) - q X_(e1f) for all bit strings with |e| + |f| <= max_len.
Report x_concat_suite(int a, int b, int max_len, int points = 3, std::uint32_t seed = 1);

}  // namespace shuffle

#endif  // SHUFFLE_X_IDENTITIES_HPP
