#pragma once

// JSON rule configurations and world files (see FORMATS.md).

#include <string>

#include "lcr/multieval.hpp"

namespace lcr {

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// {"gimel": n, "rules": [{"kind": "voting"|"must"|"absorb", "instr": "#a0", ...}]}
RuleSet load_rules(const std::string& json_text);

struct WorldSpec {
    RuleSet rules;
    FiniteWorld world;  // validated
};

/// Rule fields as in load_rules plus "processes" (taken as the world) or
/// "seeds" (closed under the rules, at most "cap" processes).
WorldSpec load_world(const std::string& json_text);

}  // namespace lcr
