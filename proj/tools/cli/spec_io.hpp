#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "planar/markov.hpp"
#include "planar/symmetry.hpp"

namespace planar::cli {

// Returns the text of `source`: inline JSON when it starts with '{',
// otherwise the contents of the named file. Throws InputError.
std::string read_source(const std::string& source);

// Parses JSON, reporting syntax errors with line/column and the offending
// line. Throws ParseError.
nlohmann::json parse_json(std::string_view text, const std::string& origin);

// {"a": [...], "m": [[...], ...]}; b is derived and must not be given.
InclusionData inclusion_from_json(const nlohmann::json& j);

// {"generators": [{"perm_a": [...], "perm_b": [...], "perm_e": [...]?}, ...]}
std::vector<GraphAutomorphism> generators_from_json(const BipartiteGraph& g,
                                                    const nlohmann::json& j);

}  // namespace planar::cli
