#pragma once

// Formulas and terms around nondeterministic choice (fork, must, voting,
// parallel or, Gustave's function) and checkers for their behaviour modulo
// the smallest pole of a rule set.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lcr/logic.hpp"
#include "lcr/model.hpp"
#include "lcr/multieval.hpp"
#include "lcr/report.hpp"
#include "lcr/syntax.hpp"

namespace lcr {

// -- formulas -----------------------------------------------------------------

/// forall X. cap over i of (X -> .. -> T (position i) -> .. -> X) -> X
Formula nondet_f(std::size_t n);
/// forall x1..xn. x1 != 0 -> .. -> xn != 0 -> (join of xi & xj, i < j) != 0
Formula nondisjoint_f(std::size_t n);
/// A with every first-order quantifier relativized to gim2.
Formula gim2_models(const Formula& a);
/// gim2 |= forall x1..xn. join of (xi = xj), i < j
Formula gim_lt(std::size_t n);
Formula gim_leq(std::size_t n);  // gim_lt(n + 1)
Formula gim_geq(std::size_t n);  // gim_lt(n) -> Bot
Formula gim_eq(std::size_t n);   // gim_geq(n) and gim_lt(n + 1)
Formula for_f();   // forall x y. bool(x) -> bool(y) -> bool(x | y)
Formula forl_f();
Formula forr_f();
Formula forp_f();
Formula gustave_f();
Formula fork_spec();  // forall X Y. X -> Y -> X cap Y
Formula must_spec();  // forall X Y. X -> Y -> X cup Y

/// Names: nondet(n), nondisjoint(n), gim2-nondisjoint(n), gim(n,k), gim-lt(n), gim-leq(n),
/// gim-geq(n), gim-eq(n), bool(k), nat(k), for, forl, forr, forp, gustave, fork, must.
/// Throws LogicError on an unknown name or a wrong parameter count.
Formula build_formula(const std::string& name, const std::vector<std::uint64_t>& params = {});
std::vector<std::string> formula_names();

// -- terms --------------------------------------------------------------------

Term true_t();   // \x y. y
Term false_t();  // \x y. x
Term torl_t();   // \x y. x y true
Term torr_t();   // \x y. y x true
Term omega_t();  // (\x. x x) (\x. x x)
Term church_t(std::uint64_t k);
Term church_succ_t();
/// Realizes nondet(n) -> (gim2 |= A_n): the identity.
Term nondet_to_gim_t();
/// Realizes (gim2 |= A_n) -> nondet(n): \t u1..un. cc (\k. t (k u1) .. (k un))
Term gim_to_nondet_t(std::size_t n);
Term por_l_t();  // \t u1 u2 u3. (t u1 u2) u1 u3
Term por_r_t();  // \t u v. t (torl u v) (torr u v) true
/// Y with x := \y. psi 0 (s y), psi left free.
Term y_psi_t(const std::string& psi = "psi");
Term nat_l_t();  // \psi. Y_psi
Term nat_r_t();  // \t u v. t (\z. u) v

/// Names: true, false, torl, torr, omega, church(k), succ, id-bridge, cc-bridge(n), por-l, por-r,
/// nat-l, nat-r.
Term build_term(const std::string& name, const std::vector<std::uint64_t>& params = {});
std::vector<std::string> term_names();

// -- behaviour checks ---------------------------------------------------------

struct VotingSample {
    std::vector<Term> args;
    Stack pi;
    std::size_t j = 0;  // the excluded argument, 0-based
};

/// Term probes true, false, bot, top, Omega, church(0..2) for the given
/// restricted absorbing / stuck instructions.
std::vector<Term> default_term_probes(const Term& bot, const Term& top);
/// e0 and the one-level pushes t . e0 for t in `items`.
std::vector<Stack> default_stack_probes(const std::vector<Term>& items);

std::vector<VotingSample> random_voting_samples(std::size_t n, const std::vector<Term>& terms,
                                                const std::vector<Stack>& stacks, std::size_t count,
                                                std::mt19937_64& rng);
/// Samples with every argument except the excluded one drawn from `agree`.
std::vector<VotingSample> agreeing_voting_samples(std::size_t n, const std::vector<Term>& agree,
                                                  const std::vector<Term>& terms, const std::vector<Stack>& stacks,
                                                  std::size_t count, std::mt19937_64& rng);

/// {phi * t1..tn . pi} |> {ti * pi : i != j}: premises the targets.
CheckReport check_voting(const Term& phi, std::size_t n, const RuleSet& rules, const std::vector<VotingSample>& samples,
                         const CheckOptions& opts = {});

enum class Behavior { Fork, Must, ParallelOr, Gustave, Voting };

const char* to_string(Behavior b);
Behavior parse_behavior(const std::string& s);

/// One sample for check_behavior. Fork and must use args {u, v}; (n,k)-voting
/// uses args t1..tn and `excluded` (size k); parallel or and Gustave use the
/// argument terms together with pi, one instance per matching formula branch.
struct BehaviorSample {
    std::vector<Term> args;
    Stack pi;
    std::vector<std::size_t> excluded;
};

struct BehaviorSpec {
    Behavior kind = Behavior::Fork;
    std::size_t n = 2;  // voting arity
    std::size_t k = 1;  // voting: size of the excluded set
};

CheckReport check_behavior(const BehaviorSpec& spec, const Term& candidate, const RuleSet& rules,
                           const std::vector<BehaviorSample>& samples, const CheckOptions& opts = {});

/// The instances check_behavior runs for one sample.
std::vector<Instance> behavior_instances(const BehaviorSpec& spec, const Term& candidate, const BehaviorSample& s);

/// Samples for parallel or / Gustave: every argument tuple over `fillers`
/// against every stack a . b . rho with a, b from `probes` and rho from `rhos`.
std::vector<BehaviorSample> boolean_samples(std::size_t arity, const std::vector<Term>& fillers,
                                            const std::vector<Term>& probes, const std::vector<Stack>& rhos);

/// 0 if u * x . y . e reduces to x * e for fresh instructions x, y and bottom e (u behaves like false),
/// 1 if it reduces to y * e, nullopt otherwise.
std::optional<int> boolean_behaviour(const Term& u, std::size_t fuel = 1000);

// -- finite worlds ------------------------------------------------------------

struct VotingEquivalence {
    bool realizes = false;  // phi realizes nondet(n) in every pole of the model
    bool voting = false;    // phi is n-voting modulo the model's poles over its terms and stacks
};

/// Decides both sides exactly in a finite model; they must agree.
VotingEquivalence voting_equivalence(const FiniteModel& m, const Term& phi, std::size_t n);

}  // namespace lcr
