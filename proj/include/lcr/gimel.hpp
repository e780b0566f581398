#pragma once

// The cardinality-two construction: instructions phi, chi, top, bot and the
// gamma family, their rule set, and the content analysis of processes
// against the smallest pole.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcr/multieval.hpp"
#include "lcr/report.hpp"
#include "lcr/syntax.hpp"

namespace lcr {

struct GimelConfig {
    std::size_t n = 2;
    std::uint32_t phi = 0;  // nonrestricted
    std::uint32_t chi = 1;  // nonrestricted
    std::uint32_t top = 0;  // restricted
    std::uint32_t bot = 1;  // restricted
    std::uint32_t gamma_base = 2;  // gamma_i is restricted #(gamma_base + i)
    std::vector<std::uint32_t> indices;  // the index set I

    // Optional extra instructions for the fork experiments.
    std::optional<std::uint32_t> fork;  // nonrestricted, {f * u.v.pi} |> {u * pi} and |> {v * pi}
    std::optional<std::uint32_t> must;  // nonrestricted, {m * u.v.pi} |> {u * pi, v * pi}

    Term phi_term() const { return nonrestricted(phi); }
    Term chi_term() const { return nonrestricted(chi); }
    Term top_term() const { return restricted(top); }
    Term bot_term() const { return restricted(bot); }
    Term gamma(std::uint32_t i) const { return restricted(gamma_base + i); }

    /// Throws std::invalid_argument when bindings collide.
    void validate() const;
};

/// gimel(n) with I = {0, ..., index_count - 1}.
GimelConfig gimel_preset(std::size_t n, std::size_t index_count = 0);
/// gimel(2) plus fork (#a2) and must (#a3) instructions.
GimelConfig fork_preset();

RuleSet gimel_rules(const GimelConfig& cfg);

/// gamma_i becomes top when i is in K, bot otherwise.
Process replace_K(const Process& p, const std::vector<std::uint32_t>& K, const GimelConfig& cfg);
/// gamma indices occurring in p; throws if one lies outside I.
std::vector<std::uint32_t> gamma_indices(const Process& p, const GimelConfig& cfg);

struct ContentSet {
    Process process;
    std::size_t radius = 0;
    std::vector<std::uint32_t> index_set;  // bit i of a member stands for index_set[i]
    std::vector<Mask> members;             // ascending

    bool contains(Mask k) const;
    std::vector<std::uint32_t> indices_of(Mask k) const;
};

inline constexpr std::size_t kMaxContentIndices = 16;

/// {K subset of I : p[K] reaches the smallest pole within r levels}.
ContentSet content_r(const Process& p, std::size_t r, const GimelConfig& cfg);
ContentSet content_r(const Process& p, std::size_t r, const GimelConfig& cfg, PoleSearch& search);

bool is_sound(const Process& p, const GimelConfig& cfg);

struct CoverResult {
    bool pass = true;
    std::size_t radius = 0;
    std::vector<std::vector<std::uint32_t>> witness;  // n content members covering I, on failure
};

/// Looks for n members of content_r(p) whose union is I.
CoverResult cover_check(const Process& p, std::size_t r, const GimelConfig& cfg);

/// Members K with some member L strictly above, K not a member.
std::vector<Mask> antitonicity_violations(const ContentSet& c);

struct GimelSamples {
    std::vector<Stack> stacks;                  // for bot * pi and chi * u . pi
    std::vector<std::vector<Term>> phi_args;    // n + 1 arguments each
    std::vector<std::size_t> phi_excluded;      // parallel to phi_args
    std::vector<Term> chi_args;                 // candidates u for chi * u . pi
};

/// Bottom stacks and one-level pushes, phi tuples with all but one argument
/// bot-headed, and chi arguments that ignore their n inputs.
GimelSamples default_gimel_samples(const GimelConfig& cfg, std::size_t count, std::uint64_t seed);

/// bot * pi in at depth 1; phi as an (n+1)-voting instruction; chi * u . pi in
/// whenever every u * b(1,k) .. b(n,k) . pi is.
CheckReport check_gimel_realizers(const GimelConfig& cfg, const GimelSamples& samples, const CheckOptions& opts = {});

}  // namespace lcr
