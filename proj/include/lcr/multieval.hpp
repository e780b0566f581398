#pragma once

// Multi-evaluation relations over sets of processes.
//
// Two presentations coexist:
//  * RuleSet: schemas with a singleton left side, generating instances
//    {p} |> Q lazily for any process. Always contains the deterministic
//    machine step. This is what the smallest-pole search runs on.
//  * FiniteRelation: an explicit relation on subsets of a small FiniteWorld,
//    used to study the axioms, closure and the duality with pole sets.
//
// Subsets of a world are bitmasks over the world's process indices.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "lcr/syntax.hpp"

namespace lcr {

using Mask = std::uint64_t;

class WorldTooLarge : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct RuleInstance {
    std::string rule;
    std::vector<Process> targets;  // duplicates removed
};

class RuleSet {
  public:
    using Fire = std::function<std::vector<std::vector<Process>>(const Process&)>;

    /// Deterministic embedding only.
    RuleSet() = default;

    RuleSet& add(std::string name, Fire fire);
    /// Every instance whose left side is {p}, deterministic step first.
    std::vector<RuleInstance> instances(const Process& p) const;
    std::vector<std::string> names() const;

  private:
    struct Schema {
        std::string name;
        Fire fire;
    };
    std::vector<Schema> schemas_;
};

// Schema helpers. `instr` is the head instruction the rule fires on.

/// {instr * t1..tn . pi} |> {ti * pi : i not in J} for every J of size `excluded`.
RuleSet::Fire voting_schema(Term instr, std::size_t arity, std::size_t excluded = 1);
/// {instr * u . v . pi} |> {u * pi, v * pi}
RuleSet::Fire must_schema(Term instr);
/// {instr * pi} |> {}
RuleSet::Fire absorb_schema(Term instr);

class FiniteWorld {
  public:
    FiniteWorld() = default;
    explicit FiniteWorld(std::vector<Process> processes);

    /// Smallest world containing `seeds` closed under step and every rule.
    static FiniteWorld close(const std::vector<Process>& seeds, const RuleSet& rules, std::size_t cap = 64);

    /// Checks closure under step and `rules`; marks the world validated on success.
    bool validate(const RuleSet& rules, std::string* why = nullptr);

    bool validated() const { return validated_; }
    std::size_t size() const { return processes_.size(); }
    const std::vector<Process>& processes() const { return processes_; }
    const Process& at(std::size_t i) const { return processes_.at(i); }
    std::optional<std::size_t> index_of(const Process& p) const;
    Mask mask_of(const std::vector<Process>& ps) const;  // throws if some process is outside
    Mask full() const { return size() >= 64 ? ~Mask{0} : (Mask{1} << size()) - 1; }

  private:
    std::vector<Process> processes_;
    std::unordered_map<Process, std::size_t, ProcessHash> index_;
    bool validated_ = false;
};

/// Explicit relation on subsets of an n-process world, n <= 12.
class FiniteRelation {
  public:
    static constexpr std::size_t kMaxProcesses = 12;

    explicit FiniteRelation(std::size_t n);

    std::size_t world_size() const { return n_; }
    bool contains(Mask p, Mask q) const { return bits_[key(p, q)] != 0; }
    void insert(Mask p, Mask q) { bits_[key(p, q)] = 1; }
    std::size_t count() const;
    std::vector<std::pair<Mask, Mask>> pairs() const;

    friend bool operator==(const FiniteRelation& a, const FiniteRelation& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

    // Raw access for the subset transforms.
    std::vector<std::uint8_t>& raw() { return bits_; }
    const std::vector<std::uint8_t>& raw() const { return bits_; }

  private:
    std::size_t key(Mask p, Mask q) const { return static_cast<std::size_t>(p | (q << n_)); }
    std::size_t n_;
    std::vector<std::uint8_t> bits_;
};

/// Instances of `rules` at every world process, as an explicit relation.
FiniteRelation relation_of_rules(const RuleSet& rules, const FiniteWorld& world);

struct AxiomViolation {
    enum class Kind { DeterministicEmbedding, Identity, Cut, Weakening } kind;
    Mask p = 0, q = 0;  // the missing pair
    std::string detail;
};

const char* to_string(AxiomViolation::Kind k);

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks embedding, identity, cut and weakening. Exhaustive; n <= 6.
AxiomReport check_axioms(const FiniteRelation& rel, const FiniteWorld& world);

/// Smallest evaluation relation containing `seed` (and the world's steps).
FiniteRelation closure(const FiniteRelation& seed, const FiniteWorld& world);

struct Pole {
    Mask members = 0;
    friend bool operator==(const Pole& a, const Pole& b) { return a.members == b.members; }
    friend bool operator<(const Pole& a, const Pole& b) { return a.members < b.members; }
};

inline constexpr std::size_t kMaxPoleEnumeration = 16;

/// Subsets S with: for every instance P |> Q, Q in S implies P meets S.
std::vector<Pole> poles_of(const RuleSet& rules, const FiniteWorld& world);
std::vector<Pole> poles_of(const FiniteRelation& rel, const FiniteWorld& world);

/// P |> Q iff every pole of the structure containing Q meets P.
FiniteRelation relation_of(const std::vector<Pole>& structure, const FiniteWorld& world);

// -- smallest pole --------------------------------------------------------

struct Justification {
    Process process;
    std::string rule;
    std::size_t depth = 0;
    std::vector<Justification> children;
};

struct PoleVerdict {
    bool in = false;
    std::size_t depth = 0;  // In: minimal r; Unknown: the cap
    std::shared_ptr<const Justification> why;

    friend bool operator==(const PoleVerdict& a, const PoleVerdict& b) { return a.in == b.in && a.depth == b.depth; }
};

std::string to_string(const PoleVerdict& v);

/// Depth-indexed AND-OR search for membership in the stratified smallest
/// pole: level 0 is empty, level r+1 holds every p with an instance
/// {p} |> Q whose targets all lie in level r. Memoized across queries.
class PoleSearch {
  public:
    explicit PoleSearch(const RuleSet& rules) : rules_(rules) {}

    /// Minimal r <= cap with p at level r.
    std::optional<std::size_t> depth(const Process& p, std::size_t cap);
    PoleVerdict verdict(const Process& p, std::size_t cap, bool with_justification = false);
    Justification justify(const Process& p, std::size_t depth);

    std::size_t memo_size() const { return memo_.size(); }

  private:
    struct Entry {
        std::optional<std::size_t> exact;
        std::size_t fails_upto = 0;  // not in level r for every r <= fails_upto
        bool instances_ready = false;
        std::vector<RuleInstance> instances;
    };
    Entry& entry(const Process& p);

    const RuleSet& rules_;
    std::unordered_map<Process, Entry, ProcessHash> memo_;
};

PoleVerdict pole_membership(const RuleSet& rules, const Process& p, std::size_t depth_cap,
                            bool with_justification = false);

/// Re-checks every node of a justification tree against the rules.
bool replay(const Justification& j, const RuleSet& rules, std::string* why = nullptr);

}  // namespace lcr
