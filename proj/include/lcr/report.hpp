#pragma once

// Instance-level check reports. Each instance says: if every premise process
// is in the smallest pole within the premise cap, the conclusion must be in
// it within the conclusion cap.

#include <optional>
#include <string>
#include <vector>

#include "lcr/multieval.hpp"
#include "lcr/syntax.hpp"

namespace lcr {

enum class Outcome { Pass, Fail, Unknown };

const char* to_string(Outcome o);

struct Instance {
    std::string label;  // e.g. "j=1" or "branch (T, bool1)"
    std::vector<Process> premises;
    Process conclusion;
};

struct InstanceResult {
    Instance instance;
    Outcome outcome = Outcome::Unknown;
    std::vector<std::optional<std::size_t>> premise_depths;
    std::optional<std::size_t> conclusion_depth;
    std::string detail;
};

struct CheckOptions {
    std::size_t depth_cap = 12;
    std::size_t slack = 2;
    std::size_t conclusion_cap = 0;  // 0: depth_cap + slack

    std::size_t conclusion_bound() const { return conclusion_cap ? conclusion_cap : depth_cap + slack; }
};

struct CheckReport {
    std::string kind;
    std::string candidate;
    CheckOptions options;
    std::vector<InstanceResult> results;

    std::size_t count(Outcome o) const;
    /// Fail if some instance fails, else Unknown if some is unknown, else Pass.
    Outcome verdict() const;
    std::string table() const;
};

/// Runs one instance against the smallest pole of `search`'s rules.
InstanceResult check_instance(const Instance& inst, PoleSearch& search, const CheckOptions& opts);

void append(CheckReport& into, const CheckReport& from);

}  // namespace lcr
