#pragma once

#include <json.hpp>

#include "univalent/classes.hpp"

namespace univalent::detail {

nlohmann::ordered_json spec_to_json(const FunctionSpec& spec);
FunctionSpec spec_from_json(const nlohmann::json& j);

}  // namespace univalent::detail
