#pragma once

#include <json.hpp>

#include "purl/core.hpp"

namespace purl {

/// Debug dump of a tree. Fields left at their defaults are omitted.
nlohmann::json to_json(const Node& node);

}  // namespace purl
