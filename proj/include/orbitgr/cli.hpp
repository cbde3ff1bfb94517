#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "orbitgr/characters.hpp"

namespace orbitgr {

/// Runs one command line (arguments after the program name). Exit codes: 0 on
/// success, 1 on usage errors, 2 on domain errors and failed oracle checks.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Splits a batch line into arguments; double quotes group, backslash escapes.
std::vector<std::string> split_command_line(std::string_view line);

/// Weight as "a,b,c" with rational coordinates (reparses with Weight::parse).
std::string weight_text(const Weight& w);
/// Weight from "1,-1", "1/2,3/2", or the rank one shorthands "a", "-a", "2a".
Weight parse_symbolic_weight(std::string_view text);

nlohmann::json character_to_json(const FormalCharacter& ch);
FormalCharacter character_from_json(const nlohmann::json& j);

}  // namespace orbitgr
