#include "cli/spec_io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "planar/errors.hpp"

namespace planar::cli {

namespace {

using nlohmann::json;

std::string where(std::string_view text, std::size_t byte) {
  std::size_t line = 1, line_start = 0;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      line_start = i + 1;
    }
  }
  std::size_t line_end = text.find('\n', line_start);
  if (line_end == std::string_view::npos) line_end = text.size();
  std::size_t column = byte >= line_start ? byte - line_start + 1 : 1;
  std::ostringstream out;
  out << "line " << line << ", column " << column << ":\n  "
      << text.substr(line_start, line_end - line_start) << "\n  "
      << std::string(column > 1 ? column - 1 : 0, ' ') << "^";
  return out.str();
}

void only_keys(const json& obj, const std::set<std::string>& allowed,
               const std::string& what) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      throw InvalidInclusion(what + ": unexpected key \"" + key + "\"");
    }
  }
}

std::uint64_t as_count(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw InvalidInclusion(what + " must be an integer");
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  auto s = v.get<std::int64_t>();
  if (s < 0) throw InvalidInclusion(what + " must be nonnegative");
  return static_cast<std::uint64_t>(s);
}

std::vector<std::size_t> index_array(const json& obj, const char* key) {
  const json& v = obj.at(key);
  if (!v.is_array()) throw InvalidAutomorphism(std::string(key) + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& x : v) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 0) {
      throw InvalidAutomorphism(std::string(key) + " entries must be nonnegative integers");
    }
    out.push_back(x.get<std::size_t>());
  }
  return out;
}

}  // namespace

std::string read_source(const std::string& source) {
  auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') return source;
  std::ifstream in(source, std::ios::binary);
  if (!in) throw InputError("cannot open \"" + source + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(std::string_view text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    // nlohmann prefixes its own location text; keep only the reason.
    auto colon = msg.rfind(": ");
    std::string reason = colon == std::string::npos ? msg : msg.substr(colon + 2);
    std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError(origin + ": malformed JSON at " + where(text, byte) + "\n" + reason);
  }
}

InclusionData inclusion_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInclusion("inclusion spec must be a JSON object");
  if (j.contains("b")) {
    throw InvalidInclusion("\"b\" must not be supplied; it is derived as m^t a");
  }
  only_keys(j, {"a", "m"}, "inclusion spec");
  if (!j.contains("a") || !j.contains("m")) {
    throw InvalidInclusion("inclusion spec needs both \"a\" and \"m\"");
  }
  if (!j["a"].is_array()) throw InvalidInclusion("\"a\" must be an array");
  std::vector<std::uint64_t> a;
  for (const auto& x : j["a"]) a.push_back(as_count(x, "entries of \"a\""));

  if (!j["m"].is_array()) throw InvalidInclusion("\"m\" must be an array of rows");
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& row : j["m"]) {
    if (!row.is_array()) throw InvalidInclusion("each row of \"m\" must be an array");
    auto& out = rows.emplace_back();
    for (const auto& x : row) out.push_back(as_count(x, "entries of \"m\""));
  }
  if (rows.empty()) throw InvalidInclusion("\"m\" has no rows");
  return InclusionData::from_matrix(AlgebraDims(std::move(a)), IntMatrix::from_rows(rows));
}

std::vector<GraphAutomorphism> generators_from_json(const BipartiteGraph& g,
                                                    const json& j) {
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array()) {
    throw InvalidAutomorphism("group spec must be {\"generators\": [...]}");
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "generators") {
      throw InvalidAutomorphism("group spec: unexpected key \"" + key + "\"");
    }
  }
  std::vector<GraphAutomorphism> out;
  std::size_t n = 0;
  for (const auto& gen : j["generators"]) {
    ++n;
    try {
      if (!gen.is_object() || !gen.contains("perm_a") || !gen.contains("perm_b")) {
        throw InvalidAutomorphism("needs \"perm_a\" and \"perm_b\"");
      }
      for (const auto& [key, value] : gen.items()) {
        if (key != "perm_a" && key != "perm_b" && key != "perm_e") {
          throw InvalidAutomorphism("unexpected key \"" + key + "\"");
        }
      }
      std::optional<std::vector<std::size_t>> perm_e;
      if (gen.contains("perm_e")) perm_e = index_array(gen, "perm_e");
      out.push_back(make_automorphism(g, index_array(gen, "perm_a"),
                                      index_array(gen, "perm_b"), std::move(perm_e)));
    } catch (const InvalidAutomorphism& e) {
      throw InvalidAutomorphism("generator " + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace planar::cli
