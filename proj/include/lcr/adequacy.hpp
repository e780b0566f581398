#pragma once

// Natural deduction with cc typed by Peirce's law: derivation trees, a
// checker, realizer extraction, Horn clause realizers and the Church
// numeral toolkit.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lcr/logic.hpp"
#include "lcr/syntax.hpp"

namespace lcr {

enum class DerivRule { Axiom, Peirce, TopIntro, BotElim, ImpIntro, ImpElim, All1Intro, All1Elim, All2Intro, All2Elim };

const char* to_string(DerivRule r);
std::optional<DerivRule> parse_deriv_rule(const std::string& s);

struct Hyp {
    std::string var;
    Formula type;
};
using Context = std::vector<Hyp>;

struct Derivation {
    DerivRule rule = DerivRule::Axiom;
    Context ctx;
    Term term;
    Formula formula;

    // Payload, by rule:
    //  All1Elim: witness. All2Elim: params and pred (X(params) := pred).
    //  All1Intro / All2Intro: eigen, when the premise uses a name other than the binder's.
    std::optional<FOTerm> witness;
    std::vector<std::string> params;
    std::optional<Formula> pred;
    std::optional<std::string> eigen;

    std::vector<Derivation> premises;
};

struct Rejection {
    std::vector<std::size_t> path;  // premise indices from the root
    DerivRule rule;
    std::string reason;
};

std::string to_string(const Rejection& r);

/// nullopt when every node instantiates its rule.
std::optional<Rejection> check_derivation(const Derivation& d);

class AdequacyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The conclusion's term with each hypothesis variable replaced by its realizer.
Term extract_realizer(const Derivation& d, const std::map<std::string, Term>& hyp_realizers = {});

// Convenience constructors; each fills in the conclusion from its premises.
Derivation axiom(Context ctx, const std::string& x);
Derivation peirce(Context ctx, Formula a, Formula b);
Derivation top_intro(Context ctx, Term t);
Derivation bot_elim(Derivation d, Formula a);
Derivation imp_intro(Derivation d);  // discharges the last hypothesis
Derivation imp_elim(Derivation f, Derivation a);
Derivation all1_intro(Derivation d, const std::string& x);
Derivation all1_elim(Derivation d, FOTerm witness);
Derivation all2_intro(Derivation d, const std::string& pred, std::size_t arity);
Derivation all2_elim(Derivation d, std::vector<std::string> params, Formula b);

// -- derivation files ---------------------------------------------------------
//
//   deriv   ::= '(' 'deriv' RULE item* ')'
//   item    ::= '(' 'ctx' ('(' NAME STRING ')')* ')'
//             | '(' 'term' STRING ')' | '(' 'formula' STRING ')'
//             | '(' 'witness' STRING ')' | '(' 'params' NAME* ')'
//             | '(' 'pred' STRING ')' | '(' 'eigen' NAME ')'
//             | '(' 'premises' deriv* ')'
//
// Strings hold terms, formulas or first-order terms in their text syntax.
// Only \" is an escape inside strings. ';' starts a comment.

class DerivationParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

Derivation parse_derivation(const std::string& text);
std::string print_derivation(const Derivation& d);

// -- Horn clauses ---------------------------------------------------------------

struct Equation {
    FOTerm lhs, rhs;
};

struct HornClause {
    std::vector<std::string> vars;
    std::vector<Equation> premises;
    std::optional<Equation> goal;  // nullopt: Bot

    bool definite() const { return goal.has_value(); }
    /// forall vars. E1 -> .. -> En -> G
    Formula formula() const;
    /// Throws LogicError on unknown symbols or stray variables.
    void validate(const FunctionRegistry& reg = FunctionRegistry::standard()) const;
};

/// The clause is true, or false at the given values of its variables.
struct HornTruth {
    bool holds = true;
    std::vector<std::uint64_t> witness;
};

/// Values in {0..bound-1} falsifying the clause, if any.
std::optional<std::vector<std::uint64_t>> horn_counterexample(const HornClause& h, std::uint64_t bound);

/// holds: a realizer of H. Otherwise a realizer of H -> Bot (goal clause) or
/// H -> Top -> Bot (definite clause). Throws if the witness does not falsify H.
Term horn_realizer(const HornClause& h, const HornTruth& truth);
/// The formula horn_realizer's result realizes.
Formula horn_realized_formula(const HornClause& h, const HornTruth& truth);

// -- natural numbers ------------------------------------------------------------

/// delta delta with delta = \d. t (d d)
Term y_of(const Term& t);

/// nat-formula(k) -> Formula; church(k), church-succ -> Term. Y itself is y_of.
std::variant<Term, Formula> build_nat(const std::string& name, const std::vector<std::uint64_t>& params = {});

}  // namespace lcr
