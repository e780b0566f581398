#pragma once

#include <json.hpp>

#include "lcr/multieval.hpp"

namespace lcr::detail {

/// Reads the "gimel" and "rules" fields of a configuration object.
RuleSet rules_from_json(const nlohmann::json& j);

}  // namespace lcr::detail
