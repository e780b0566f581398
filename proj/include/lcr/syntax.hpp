#pragma once

// Terms, stacks and processes of the lambda-c calculus.
//
// Terms use a locally nameless representation: variables bound by an
// enclosing abstraction are de Bruijn indices, free variables (only present
// in open terms, e.g. inside typing derivations) carry their name. Binder
// display names are kept for printing but ignored by equality and hashing,
// so alpha-equivalent terms compare equal.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lcr {

struct TermNode;
struct StackNode;
class Stack;

enum class TermKind { Bound, Free, App, Lam, Cc, Cont, Instr };

class Term {
  public:
    Term() = default;

    static Term bound(std::uint32_t index, std::string display = {});
    static Term free(std::string name);
    static Term app(Term fun, Term arg);
    /// Abstraction over an already de Bruijn-encoded body.
    static Term lam_raw(Term body, std::string display = {});
    static Term cc();
    static Term cont(Stack stack);
    static Term instr(bool restricted, std::uint32_t index);

    bool valid() const { return node_ != nullptr; }
    TermKind kind() const;
    std::uint32_t index() const;      // Bound, Instr
    bool restricted() const;          // Instr
    const std::string& name() const;  // Free name, Bound/Lam display name
    const Term& fun() const;
    const Term& arg() const;
    const Term& body() const;
    const Stack& stack() const;  // Cont

    std::size_t hash() const;
    std::size_t size() const;
    /// Largest "escaping" de Bruijn depth: 0 means no dangling bound index.
    std::uint32_t open_depth() const;
    bool has_free() const;
    bool closed() const { return open_depth() == 0 && !has_free(); }

    friend bool operator==(const Term& a, const Term& b);
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
    friend bool operator<(const Term& a, const Term& b);

  private:
    explicit Term(std::shared_ptr<const TermNode> n) : node_(std::move(n)) {}
    std::shared_ptr<const TermNode> node_;
};

class Stack {
  public:
    /// Null handle; only meaningful after assignment.
    Stack() = default;

    static Stack bottom(std::uint32_t index);
    static Stack cons(Term head, Stack tail);

    bool valid() const { return node_ != nullptr; }
    bool is_bottom() const;
    std::uint32_t bottom_index() const;  // index of the bottom ending this stack
    const Term& head() const;
    const Stack& tail() const;
    std::size_t length() const;
    std::size_t hash() const;
    std::size_t size() const;

    friend bool operator==(const Stack& a, const Stack& b);
    friend bool operator!=(const Stack& a, const Stack& b) { return !(a == b); }
    friend bool operator<(const Stack& a, const Stack& b);

  private:
    explicit Stack(std::shared_ptr<const StackNode> n) : node_(std::move(n)) {}
    std::shared_ptr<const StackNode> node_;
};

struct Process {
    Term head;
    Stack stack;

    std::size_t hash() const;
    friend bool operator==(const Process& a, const Process& b) {
        return a.head == b.head && a.stack == b.stack;
    }
    friend bool operator!=(const Process& a, const Process& b) { return !(a == b); }
    friend bool operator<(const Process& a, const Process& b);
};

struct TermHash {
    std::size_t operator()(const Term& t) const { return t.hash(); }
};
struct StackHash {
    std::size_t operator()(const Stack& s) const { return s.hash(); }
};
struct ProcessHash {
    std::size_t operator()(const Process& p) const { return p.hash(); }
};

// -- construction helpers ---------------------------------------------------

inline Term var(std::string name) { return Term::free(std::move(name)); }
/// \name. body, where `name` occurs free in `body`.
Term lam(const std::string& name, const Term& body);
Term lams(const std::vector<std::string>& names, const Term& body);
Term apps(Term fun, const std::vector<Term>& args);
Term operator*(const Term& fun, const Term& arg);  // application
inline Term nonrestricted(std::uint32_t i) { return Term::instr(false, i); }
inline Term restricted(std::uint32_t i) { return Term::instr(true, i); }

Stack stack_of(const std::vector<Term>& items, std::uint32_t bottom = 0);
Stack push_all(const std::vector<Term>& items, Stack tail);
inline Process operator*(const Term& head, const Stack& stack) { return Process{head, stack}; }

// -- substitution -----------------------------------------------------------

/// Simultaneous substitution of closed terms for free variables.
Term substitute(const Term& t, const std::vector<std::pair<std::string, Term>>& bindings);
/// Body of an abstraction instantiated with a closed argument.
Term instantiate(const Term& body, const Term& arg);
/// Turns the free variable `name` into the outermost bound index of `t`.
Term abstract(const Term& t, const std::string& name);
std::vector<std::string> free_names(const Term& t);

bool is_proof_like(const Term& t);
bool contains_instr(const Term& t, bool restricted, std::uint32_t index);
bool contains_instr(const Stack& s, bool restricted, std::uint32_t index);

/// Replaces every instruction, including those inside continuation constants.
using InstrMap = std::function<Term(const Term& instr)>;
Term map_instructions(const Term& t, const InstrMap& f);
Stack map_instructions(const Stack& s, const InstrMap& f);
Process map_instructions(const Process& p, const InstrMap& f);
/// Distinct instructions occurring anywhere in p, in term order.
std::vector<Term> instructions_in(const Process& p);

// -- parsing and printing ---------------------------------------------------

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at offset " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

  private:
    std::size_t pos_;
};

struct ParseOptions {
    bool allow_free = false;
    /// Identifiers that are not bound are looked up here before failing.
    const std::unordered_map<std::string, Term>* macros = nullptr;
};

Term parse_term(std::string_view text, const ParseOptions& opts = {});
Stack parse_stack(std::string_view text, const ParseOptions& opts = {});
/// `t * stack`; a bare term is run against the bottom e0.
Process parse_process(std::string_view text, const ParseOptions& opts = {});

std::string print(const Term& t);
std::string print(const Stack& s);
std::string print(const Process& p);

}  // namespace lcr
