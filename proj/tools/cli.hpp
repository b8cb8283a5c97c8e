#ifndef SHUFFLE_TOOLS_CLI_HPP
#define SHUFFLE_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "shuffle/shuffle_element.hpp"

namespace shuffle::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Structured form of the canonical text: {k, d, num, den}, terms as
// [coeff_num, coeff_den, s_exp, q2_exp, [z_exps]] (den terms without z).
nlohmann::json to_json(const ShuffleElement& e);
ShuffleElement from_json(const nlohmann::json& j);

// Canonical text or JSON, whichever the content looks like.
ShuffleElement read_element(const std::string& text);

// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shuffle::cli

#endif  // SHUFFLE_TOOLS_CLI_HPP
