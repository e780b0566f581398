// Formula and first-order term text syntax.
//
//   F ::= F '->' F | F 'cap' F | F 'cup' F
//       | 'forall' x ['^' n] ['.'] F | 'forall2' X ['/' k] ['.'] F
//       | 'ex' x ['.'] F | 'ex2' X ['/' k] ['.'] F
//       | a '=' b '|>' F | a '=' b | a '!=' b
//       | 'Top' | 'Bot' | X ['(' a, ... ')'] | '[' F ']' ['(' a, ... ')']
//       | 'not' '(' F ')' | ('and'|'or'|'iff') '(' F ',' F ')'
//       | 'nat' '(' a ')' | 'bool' '(' a ')' | 'gim' '(' n ',' a ')' | '(' F ')'
//   a ::= a '|' a | a '&' a | a '+' a | a '*' a | '~' a | n | x | f '(' a, ... ')' | '(' a ')'
//
// Predicate variables start with an upper-case letter, first-order variables
// and function symbols with a lower-case one. '->' is right associative and
// binds loosest; binders and '|>' extend as far right as possible.

#include <cctype>
#include <set>

#include "lcr/logic.hpp"

namespace lcr {

namespace {

enum class Tok { Ident, Number, Sym, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    static const std::vector<std::string> syms{"->", "|>", "!=", "(", ")", ",", ".", "/", "[", "]",
                                               "=",  "|",  "&",  "+", "*", "~", "^"};
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\''))
                ++j;
            out.push_back({Tok::Ident, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Number, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        bool matched = false;
        for (const auto& sym : syms)
            if (s.compare(i, sym.size(), sym) == 0) {
                out.push_back({Tok::Sym, sym, i});
                i += sym.size();
                matched = true;
                break;
            }
        if (!matched) throw FormulaParseError(std::string("unexpected character '") + s[i] + "'", i);
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

const std::set<std::string> kKeywords{"forall", "forall2", "ex", "ex2", "cap", "cup", "Top", "Bot",
                                      "not",    "and",     "or", "iff", "nat", "bool", "gim"};

bool is_upper(const std::string& s) { return !s.empty() && std::isupper(static_cast<unsigned char>(s[0])); }

class Parser {
  public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    Formula formula_all() {
        Formula f = formula();
        expect_end();
        return f;
    }

    FOTerm term_all() {
        FOTerm t = term();
        expect_end();
        return t;
    }

  private:
    const Token& peek(std::size_t k = 0) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }
    bool at_sym(const std::string& sym) const { return peek().kind == Tok::Sym && peek().text == sym; }
    bool at_kw(const std::string& kw) const { return peek().kind == Tok::Ident && peek().text == kw; }

    [[noreturn]] void fail(const std::string& msg) const { throw FormulaParseError(msg, peek().pos); }

    void expect_sym(const std::string& sym) {
        if (!at_sym(sym)) fail("expected '" + sym + "'");
        ++i_;
    }

    void expect_end() {
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    }

    std::string ident() {
        if (peek().kind != Tok::Ident || kKeywords.count(peek().text)) fail("expected an identifier");
        return toks_[i_++].text;
    }

    std::uint64_t number() {
        if (peek().kind != Tok::Number) fail("expected a number");
        try {
            return std::stoull(toks_[i_++].text);
        } catch (const std::exception&) {
            fail("number out of range");
        }
    }

    void skip_dot() {
        if (at_sym(".")) ++i_;
    }

    Formula formula() {
        Formula left = capcup();
        if (at_sym("->")) {
            ++i_;
            return Formula::imp(left, formula());
        }
        return left;
    }

    Formula capcup() {
        Formula acc = prefix();
        while (at_kw("cap") || at_kw("cup")) {
            bool cap = peek().text == "cap";
            ++i_;
            Formula rhs = prefix();
            acc = cap ? Formula::cap(acc, rhs) : Formula::cup(acc, rhs);
        }
        return acc;
    }

    Formula prefix() {
        if (at_kw("forall")) {
            ++i_;
            std::string x = ident();
            if (is_upper(x)) fail("first-order binder must start with a lower-case letter");
            std::optional<std::uint64_t> bound;
            if (at_sym("^")) {
                ++i_;
                bound = number();
            }
            skip_dot();
            Formula body = formula();
            return bound ? forall_gim(*bound, x, body) : Formula::forall(x, body);
        }
        if (at_kw("ex")) {
            ++i_;
            std::string x = ident();
            skip_dot();
            return exists(x, formula());
        }
        if (at_kw("forall2") || at_kw("ex2")) {
            bool ex = peek().text == "ex2";
            ++i_;
            std::string X = ident();
            if (!is_upper(X)) fail("predicate binder must start with an upper-case letter");
            std::size_t arity = 0;
            if (at_sym("/")) {
                ++i_;
                arity = number();
            }
            skip_dot();
            Formula body = formula();
            return ex ? exists2(X, arity, body) : Formula::forall2(X, arity, body);
        }
        return primary();
    }

    std::vector<FOTerm> term_args() {
        std::vector<FOTerm> args;
        if (!at_sym("(")) return args;
        ++i_;
        if (at_sym(")")) {
            ++i_;
            return args;
        }
        args.push_back(term());
        while (at_sym(",")) {
            ++i_;
            args.push_back(term());
        }
        expect_sym(")");
        return args;
    }

    Formula primary() {
        const Token& t = peek();
        if (t.kind == Tok::Ident) {
            if (t.text == "Top") return ++i_, Formula::top();
            if (t.text == "Bot") return ++i_, Formula::bot();
            if (t.text == "not" || t.text == "and" || t.text == "or" || t.text == "iff") {
                std::string kw = t.text;
                ++i_;
                expect_sym("(");
                Formula a = formula();
                if (kw == "not") {
                    expect_sym(")");
                    return neg(a);
                }
                expect_sym(",");
                Formula b = formula();
                expect_sym(")");
                return kw == "and" ? conj(a, b) : kw == "or" ? disj(a, b) : iff(a, b);
            }
            if (t.text == "nat" || t.text == "bool") {
                std::string kw = t.text;
                ++i_;
                expect_sym("(");
                FOTerm a = term();
                expect_sym(")");
                return kw == "nat" ? nat_f(a) : bool_f(a);
            }
            if (t.text == "gim") {
                ++i_;
                expect_sym("(");
                std::uint64_t n = number();
                expect_sym(",");
                FOTerm a = term();
                expect_sym(")");
                return gim(n, a);
            }
            if (is_upper(t.text) && !kKeywords.count(t.text)) {
                std::string X = t.text;
                ++i_;
                return Formula::atom(X, term_args());
            }
        }
        if (at_sym("[")) {
            ++i_;
            std::string name = ident();
            expect_sym("]");
            return Formula::constant(name, term_args());
        }
        if (at_sym("(")) {
            // Either a parenthesized formula or an equation starting with a parenthesized term.
            std::size_t save = i_;
            try {
                return equation();
            } catch (const FormulaParseError&) {
                i_ = save;
            }
            ++i_;
            Formula f = formula();
            expect_sym(")");
            return f;
        }
        return equation();
    }

    Formula equation() {
        FOTerm a = term();
        if (at_sym("!=")) {
            ++i_;
            return neq(a, term());
        }
        expect_sym("=");
        FOTerm b = term();
        if (at_sym("|>")) {
            ++i_;
            return Formula::eq_imp(a, b, formula());
        }
        return eq(a, b);
    }

    FOTerm term() { return binary(0); }

    FOTerm binary(int level) {
        static const char* ops[] = {"|", "&", "+", "*"};
        if (level == 4) return unary();
        FOTerm acc = binary(level + 1);
        while (at_sym(ops[level])) {
            ++i_;
            acc = FOTerm::apply(ops[level], {acc, binary(level + 1)});
        }
        return acc;
    }

    FOTerm unary() {
        if (at_sym("~")) {
            ++i_;
            return FOTerm::apply("~", {unary()});
        }
        if (peek().kind == Tok::Number) return FOTerm::numeral(number());
        if (at_sym("(")) {
            ++i_;
            FOTerm t = term();
            expect_sym(")");
            return t;
        }
        if (peek().kind == Tok::Ident && !is_upper(peek().text) && !kKeywords.count(peek().text)) {
            std::string name = toks_[i_++].text;
            if (at_sym("(")) return FOTerm::apply(name, term_args());
            return FOTerm::variable(name);
        }
        fail("expected a first-order term");
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

int term_level(const FOTerm& a) {
    if (a.kind() == FOTerm::Kind::Var || a.as_numeral()) return 5;
    const std::string& n = a.name();
    if (n == "|" && a.args().size() == 2) return 0;
    if (n == "&" && a.args().size() == 2) return 1;
    if (n == "+" && a.args().size() == 2) return 2;
    if (n == "*" && a.args().size() == 2) return 3;
    if (n == "~" && a.args().size() == 1) return 4;
    return 5;
}

std::string print_term(const FOTerm& a, int ctx) {
    int lvl = term_level(a);
    std::string s;
    if (a.kind() == FOTerm::Kind::Var) {
        s = a.name();
    } else if (auto n = a.as_numeral()) {
        s = std::to_string(*n);
    } else if (lvl <= 3) {
        // left associative: the right operand needs one level more
        s = print_term(a.args()[0], lvl) + " " + a.name() + " " + print_term(a.args()[1], lvl + 1);
    } else if (lvl == 4) {
        s = "~" + print_term(a.args()[0], 4);
    } else {
        s = a.name() + "(";
        for (std::size_t i = 0; i < a.args().size(); ++i) s += (i ? ", " : "") + print_term(a.args()[i], 0);
        s += ")";
    }
    return lvl < ctx ? "(" + s + ")" : s;
}

std::string print_args(const std::vector<FOTerm>& args) {
    if (args.empty()) return "";
    std::string s = "(";
    for (std::size_t i = 0; i < args.size(); ++i) s += (i ? ", " : "") + print_term(args[i], 0);
    return s + ")";
}

// Contexts: 0 anywhere, 1 operand of cap/cup or left of '->'.
std::string print_formula(const Formula& a, int ctx) {
    std::string s;
    bool open_right = false;  // extends as far right as possible
    switch (a.kind()) {
        case FormulaKind::Top: return "Top";
        case FormulaKind::Bot: return "Bot";
        case FormulaKind::Atom: return a.name() + print_args(a.args());
        case FormulaKind::Const: return "[" + a.name() + "]" + print_args(a.args());
        case FormulaKind::Imp:
            s = print_formula(a.left(), 1) + " -> " + print_formula(a.right(), 0);
            open_right = true;
            break;
        case FormulaKind::Cap:
        case FormulaKind::Cup: {
            std::string op = a.kind() == FormulaKind::Cap ? " cap " : " cup ";
            s = print_formula(a.left(), 1) + op + print_formula(a.right(), 1);
            if (ctx == 1) s = "(" + s + ")";
            return s;
        }
        case FormulaKind::Forall1:
            s = "forall " + a.name() + ". " + print_formula(a.body(), 0);
            open_right = true;
            break;
        case FormulaKind::Forall2:
            s = "forall2 " + a.name() + (a.arity() ? "/" + std::to_string(a.arity()) : "") + ". " +
                print_formula(a.body(), 0);
            open_right = true;
            break;
        case FormulaKind::EqImp:
            s = print_term(a.args()[0], 0) + " = " + print_term(a.args()[1], 0) + " |> " + print_formula(a.body(), 0);
            open_right = true;
            break;
    }
    return open_right && ctx == 1 ? "(" + s + ")" : s;
}

}  // namespace

FOTerm parse_fo_term(const std::string& text) { return Parser(text).term_all(); }
Formula parse_formula(const std::string& text) { return Parser(text).formula_all(); }
std::string print(const FOTerm& a) { return print_term(a, 0); }
std::string print(const Formula& a) { return print_formula(a, 0); }

}  // namespace lcr
