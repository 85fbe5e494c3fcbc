#pragma once

#include "wh3/algebra.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace wh3 {

/// Algebra-definition file:
///   { "name", "generators": [{"name", "parity", "rank", "weight"}],
///     "relations": [expression strings], "order": [names] }
/// "weight" is optional (default 0). When "order" is present it overrides
/// the ranks.
nlohmann::ordered_json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const nlohmann::json& j);

Presentation read_algebra_file(const std::filesystem::path& path);
void write_algebra_file(const std::filesystem::path& path, const Presentation& p);

}  // namespace wh3
