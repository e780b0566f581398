#pragma once

// Named verification suites. Each suite is seeded and deterministic; its
// records come out in a fixed order whatever the seed.

#include <cstdint>
#include <string>
#include <vector>

#include "lcr/model.hpp"
#include "lcr/report.hpp"

namespace lcr {

inline constexpr std::uint64_t kDefaultSeed = 1;

struct SuiteRecord {
    std::string check;
    Outcome outcome = Outcome::Pass;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = kDefaultSeed;
    std::vector<SuiteRecord> records;

    std::size_t count(Outcome o) const;
    /// No record failed.
    bool ok() const { return count(Outcome::Fail) == 0; }
};

/// falsity-lemmas, multieval, determinism, voting, gimel-realizers,
/// consistency, parallel-or, adequacy, nat.
const std::vector<std::string>& suite_names();
bool has_suite(const std::string& name);
/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, std::uint64_t seed = kDefaultSeed);

/// Models with N = 2 used by the falsity lemma checks.
std::vector<std::pair<std::string, FiniteModel>> lemma_models();

}  // namespace lcr
