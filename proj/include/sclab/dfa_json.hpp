#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sclab/dfa.hpp"

namespace sclab {

/// {"alphabet": [...], "states": n, "initial": i, "finals": [...], "delta": [[...], ...]}
nlohmann::ordered_json to_json(const Dfa& d);

/// Validates ranges and completeness; throws std::invalid_argument.
Dfa dfa_from_json(const nlohmann::json& j);

/// Byte-stable rendering: fixed field order, sorted finals, one delta row per line.
std::string write_dfa(const Dfa& d);
Dfa read_dfa(std::string_view text);

/// A JSON array of DFAs, one per line-block, in the same per-DFA layout.
std::string write_dfas(const std::vector<Dfa>& ds);

/// Accepts either a single DFA object or an array of them.
std::vector<Dfa> read_dfas(std::string_view text);

}  // namespace sclab
