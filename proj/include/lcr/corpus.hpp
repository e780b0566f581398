#pragma once

// Built-in corpora shared by the verify suites, the acceptance run and the
// tests: golden derivations and small finite models.

#include <map>
#include <string>
#include <vector>

#include "lcr/adequacy.hpp"
#include "lcr/model.hpp"

namespace lcr {

struct GoldenDerivation {
    std::string name;
    Derivation derivation;
    std::map<std::string, Term> hyp_realizers;  // for open contexts
};

/// At least one derivation per rule; root formulas are closed.
std::vector<GoldenDerivation> golden_derivations();

/// One copy of d per payload-carrying node, with that payload corrupted.
std::vector<Derivation> payload_mutations(const Derivation& d);

struct NamedModel {
    std::string name;
    FiniteModel model;
};

/// At every pole where the hypothesis realizers realize their formulas, the
/// extracted realizer realizes the conclusion.
bool adequacy_in_model(const FiniteModel& m, const GoldenDerivation& g, std::string* why = nullptr);

/// Small models at two individuals: pure terms, an absorbing instruction, cc probes.
std::vector<NamedModel> corpus_models();

}  // namespace lcr
