#pragma once

// Finite semantics for the realizability language.
//
// A model fixes a finite term universe L0, a finite set of base stacks S0
// and a rule set. Its world is the closure of L0 x S0 under evaluation and
// the rules; its poles are those of the rule set on that world. Falsity
// values are sets of stacks built from L0 on top of S0:
//   |Bot| = S0, |A -> B| = { t . pi : t in L0 realizing A, pi in |B| },
// individuals range over {0..N-1}, and second-order quantifiers range over
// every table from {0..D-1}^k to subsets of S0.
//
// A process outside the world is decided by running the machine until it
// enters the world; a pole P of the world extends to the genuine pole
// { p : p evaluates to some q in P }. Processes that never enter the world
// are outside every extended pole. A process that would need a
// nondeterministic rule outside the world is an error.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "lcr/logic.hpp"
#include "lcr/multieval.hpp"
#include "lcr/syntax.hpp"

namespace lcr {

using StackSet = std::set<Stack>;

struct Table {
    std::size_t arity = 0;
    std::uint64_t domain = 0;
    std::vector<StackSet> values;  // mixed-radix index over {0..domain-1}^arity

    const StackSet& at(const std::vector<std::uint64_t>& args) const;
};

struct ModelConfig {
    std::uint64_t individuals = 2;   // N
    std::uint64_t table_domain = 0;  // D; 0 means N + 1
    std::size_t max_table_bits = 20; // at most 2^20 tables per second-order quantifier
    std::size_t resolve_fuel = 10000;
    std::size_t world_cap = 16;
};

class FiniteModel {
  public:
    FiniteModel(std::vector<Term> terms, std::vector<Stack> stacks, RuleSet rules = {}, ModelConfig cfg = {},
                std::vector<Process> extra = {});

    const std::vector<Term>& terms() const { return terms_; }
    const std::vector<Stack>& stacks() const { return stacks_; }
    const FiniteWorld& world() const { return world_; }
    const RuleSet& rules() const { return rules_; }
    const ModelConfig& config() const { return cfg_; }
    std::uint64_t table_domain() const { return domain_; }

    const std::vector<Pole>& poles() const { return poles_; }
    /// Replaces the enumerated poles by a chosen structure.
    void set_poles(std::vector<Pole> poles);

    void define_table(const std::string& name, Table table);

    bool in_pole(const Process& p, std::size_t pole) const;
    StackSet falsity(const Formula& a, std::size_t pole) const;
    /// Terms of L0 realizing A.
    std::vector<Term> truth(const Formula& a, std::size_t pole) const;
    /// Terms of L0 that make every stack of X land in the pole.
    std::vector<Term> dual(const StackSet& x, std::size_t pole) const;
    bool realizes(const Term& t, const Formula& a, std::size_t pole) const;
    bool realizes_everywhere(const Term& t, const Formula& a) const;

    /// falsity(A) contains falsity(B) at every pole, so \t. t realizes A -> B.
    bool sem_le(const Formula& a, const Formula& b) const;
    bool sem_eq(const Formula& a, const Formula& b) const;

  private:
    struct Env {
        std::map<std::string, std::uint64_t> fo;
        std::map<std::string, const Table*> so;
    };
    StackSet eval(const Formula& a, std::size_t pole, Env& env) const;
    bool holds_all(const Term& t, const StackSet& x, std::size_t pole) const;
    static constexpr long kEveryPole = -2;
    /// World index reached by running p, -1 if it never enters the world,
    /// kEveryPole if it reaches an instance with no targets on the way.
    long resolve(const Process& p) const;

    std::vector<Term> terms_;
    std::vector<Stack> stacks_;
    RuleSet rules_;
    ModelConfig cfg_;
    std::uint64_t domain_;
    FiniteWorld world_;
    std::vector<Pole> poles_;
    std::map<std::string, Table> tables_;
    mutable std::unordered_map<Process, long, ProcessHash> resolved_;
};

/// Model description in JSON (see FORMATS.md).
FiniteModel load_model(const std::string& json_text);

}  // namespace lcr
