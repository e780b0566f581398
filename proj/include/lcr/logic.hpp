#pragma once

// The realizability language: first-order terms over a registry of total
// functions on naturals, and second-order formulas with equational
// implication, intersection, union and predicate constants.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcr {

// -- first-order terms --------------------------------------------------------

struct FONode;

class FOTerm {
  public:
    enum class Kind { Var, Apply };

    FOTerm() = default;
    static FOTerm variable(std::string name);
    static FOTerm apply(std::string fn, std::vector<FOTerm> args = {});
    /// s(...s(0)...)
    static FOTerm numeral(std::uint64_t n);

    bool valid() const { return node_ != nullptr; }
    Kind kind() const;
    const std::string& name() const;  // variable or function symbol
    const std::vector<FOTerm>& args() const;
    /// n when the term is s^n(0).
    std::optional<std::uint64_t> as_numeral() const;

    friend bool operator==(const FOTerm& a, const FOTerm& b);
    friend bool operator!=(const FOTerm& a, const FOTerm& b) { return !(a == b); }
    friend bool operator<(const FOTerm& a, const FOTerm& b);

  private:
    explicit FOTerm(std::shared_ptr<const FONode> n) : node_(std::move(n)) {}
    std::shared_ptr<const FONode> node_;
};

class FunctionRegistry {
  public:
    using Fn = std::function<std::uint64_t(const std::vector<std::uint64_t>&)>;

    /// 0, s, +, *, min, max and the Boolean or, and, not on naturals.
    static const FunctionRegistry& standard();

    void define(std::string name, std::size_t arity, Fn fn);
    bool has(const std::string& name) const { return fns_.count(name) != 0; }
    std::size_t arity(const std::string& name) const;
    std::uint64_t call(const std::string& name, const std::vector<std::uint64_t>& args) const;

  private:
    struct Entry {
        std::size_t arity;
        Fn fn;
    };
    std::map<std::string, Entry> fns_;
};

class LogicError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Value of a term under an assignment of its variables.
std::uint64_t fo_value(const FOTerm& a, const std::map<std::string, std::uint64_t>& env = {},
                       const FunctionRegistry& reg = FunctionRegistry::standard());
/// Throws LogicError on unknown symbols or arity mismatches.
void check_symbols(const FOTerm& a, const FunctionRegistry& reg = FunctionRegistry::standard());

FOTerm subst_fo(const FOTerm& a, const std::string& x, const FOTerm& b);
void fo_vars(const FOTerm& a, std::vector<std::string>& out);

// -- formulas -----------------------------------------------------------------

enum class FormulaKind { Atom, Top, Bot, Imp, Forall1, Forall2, EqImp, Cap, Cup, Const };

struct FormulaNode;

class Formula {
  public:
    Formula() = default;

    /// X(a1..an) for a predicate variable X.
    static Formula atom(std::string pred, std::vector<FOTerm> args = {});
    static Formula top();
    static Formula bot();
    static Formula imp(Formula a, Formula b);
    static Formula forall(std::string x, Formula body);
    static Formula forall2(std::string pred, std::size_t arity, Formula body);
    /// (a = b) |> body
    static Formula eq_imp(FOTerm a, FOTerm b, Formula body);
    static Formula cap(Formula a, Formula b);
    static Formula cup(Formula a, Formula b);
    /// [F](a1..an) for a named table of the model.
    static Formula constant(std::string table, std::vector<FOTerm> args = {});

    bool valid() const { return node_ != nullptr; }
    FormulaKind kind() const;
    const std::string& name() const;  // Atom/Const symbol, binder name
    std::size_t arity() const;        // Forall2 binder arity
    const std::vector<FOTerm>& args() const;  // Atom, Const; EqImp: {a, b}
    const Formula& left() const;   // Imp/Cap/Cup left, binder body, EqImp body
    const Formula& right() const;  // Imp/Cap/Cup right
    const Formula& body() const { return left(); }

    /// Structural equality, binder names included; see alpha_equal.
    friend bool operator==(const Formula& a, const Formula& b);
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

  private:
    explicit Formula(std::shared_ptr<const FormulaNode> n) : node_(std::move(n)) {}
    std::shared_ptr<const FormulaNode> node_;
};

Formula imps(const std::vector<Formula>& premises, Formula conclusion);
Formula caps(const std::vector<Formula>& parts);

bool alpha_equal(const Formula& a, const Formula& b);

/// Free first-order variables, sorted.
std::vector<std::string> free_fo_vars(const Formula& a);
/// Free predicate variables with their arities, sorted by name.
std::vector<std::pair<std::string, std::size_t>> free_pred_vars(const Formula& a);
bool is_closed(const Formula& a);

/// A[x := b], renaming binders that would capture.
Formula subst_fo(const Formula& a, const std::string& x, const FOTerm& b);
/// A[X(y1..yn) := B]
Formula subst_pred(const Formula& a, const std::string& pred, const std::vector<std::string>& params,
                   const Formula& b);

/// Checks arities of predicate variables and function symbols.
void check_formula(const Formula& a, const FunctionRegistry& reg = FunctionRegistry::standard());

// -- derived connectives ------------------------------------------------------

Formula eq(const FOTerm& a, const FOTerm& b);      // forall Z. Z(a) -> Z(b)
Formula neq(const FOTerm& a, const FOTerm& b);     // (a = b) |> Bot
Formula conj(const Formula& a, const Formula& b);  // forall Z. (A -> B -> Z) -> Z
Formula disj(const Formula& a, const Formula& b);  // forall Z. (A -> Z) -> (B -> Z) -> Z
Formula neg(const Formula& a);                     // A -> Bot
Formula iff(const Formula& a, const Formula& b);
Formula exists(const std::string& x, const Formula& a);  // forall Z. (forall x. A -> Z) -> Z
Formula exists2(const std::string& pred, std::size_t arity, const Formula& a);
/// a + 1 <= n, written min(a + 1, n) = a + 1, as an equation usable in |>.
std::pair<FOTerm, FOTerm> gim_equation(std::uint64_t n, const FOTerm& a);
Formula gim(std::uint64_t n, const FOTerm& a);  // the equation as a formula
/// forall x. gim_n(x) |> A
Formula forall_gim(std::uint64_t n, const std::string& x, const Formula& a);
/// Every forall x in A relativized to gim_n.
Formula relativize(std::uint64_t n, const Formula& a);
Formula bool_f(const FOTerm& y);  // forall X. X(0) -> X(1) -> X(y)
Formula nat_f(const FOTerm& x);   // forall Z. (forall y. Z(y) -> Z(s(y))) -> Z(0) -> Z(x)

/// Generic entry point: "=", "!=", "and", "or", "not", "iff", "ex", "ex2", "forall-gim".
/// `fs` holds formula arguments, `ts` term arguments, `names` binder names, `n` the gim bound or
/// the ex2 arity.
Formula desugar(const std::string& connective, const std::vector<Formula>& fs, const std::vector<FOTerm>& ts = {},
                const std::vector<std::string>& names = {}, std::uint64_t n = 0);

// -- text ---------------------------------------------------------------------

class FormulaParseError : public std::runtime_error {
  public:
    FormulaParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at offset " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

  private:
    std::size_t pos_;
};

FOTerm parse_fo_term(const std::string& text);
Formula parse_formula(const std::string& text);
std::string print(const FOTerm& a);
std::string print(const Formula& a);

}  // namespace lcr
