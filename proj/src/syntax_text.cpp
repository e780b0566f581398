// Surface syntax for terms, stacks and processes.
//
//   t ::= ident | '\' ident+ '.' t | t t | 'cc' | '#a' nat | '#b' nat | 'k[' stack ']' | '(' t ')'
//   stack ::= t '.' stack | 'e' nat
//   process ::= t '*' stack | t

#include <algorithm>
#include <cctype>
#include <set>

#include "lcr/syntax.hpp"

namespace lcr {

namespace {

enum class Tok { Ident, Lambda, Dot, LParen, RParen, Star, Cc, InstrA, InstrB, KOpen, RBracket, End };

struct Token {
    Tok kind;
    std::string text;
    std::uint32_t number = 0;
    std::size_t pos = 0;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (c == '\\') {
            out.push_back({Tok::Lambda, "\\", 0, start});
            ++i;
        } else if (s.substr(i, 2) == "\xce\xbb") {  // UTF-8 lambda
            out.push_back({Tok::Lambda, "\\", 0, start});
            i += 2;
        } else if (c == '.') {
            out.push_back({Tok::Dot, ".", 0, start});
            ++i;
        } else if (c == '(') {
            out.push_back({Tok::LParen, "(", 0, start});
            ++i;
        } else if (c == ')') {
            out.push_back({Tok::RParen, ")", 0, start});
            ++i;
        } else if (c == ']') {
            out.push_back({Tok::RBracket, "]", 0, start});
            ++i;
        } else if (c == '*') {
            out.push_back({Tok::Star, "*", 0, start});
            ++i;
        } else if (c == '#') {
            if (i + 1 >= s.size() || (s[i + 1] != 'a' && s[i + 1] != 'b'))
                throw ParseError("expected '#a' or '#b'", start);
            bool restricted_kind = s[i + 1] == 'b';
            i += 2;
            std::size_t digits = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (digits == i) throw ParseError("instruction needs an index", start);
            auto n = static_cast<std::uint32_t>(std::stoul(std::string(s.substr(digits, i - digits))));
            out.push_back({restricted_kind ? Tok::InstrB : Tok::InstrA, std::string(s.substr(start, i - start)), n,
                           start});
        } else if (ident_start(c)) {
            while (i < s.size() && ident_char(s[i])) ++i;
            std::string word(s.substr(start, i - start));
            if (word == "k" && i < s.size() && s[i] == '[') {
                out.push_back({Tok::KOpen, "k[", 0, start});
                ++i;
                continue;
            }
            out.push_back({word == "cc" ? Tok::Cc : Tok::Ident, word, 0, start});
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }
    out.push_back({Tok::End, "", 0, s.size()});
    return out;
}

bool is_bottom_name(const std::string& w) {
    return w.size() >= 2 && w[0] == 'e' &&
           std::all_of(w.begin() + 1, w.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

class Parser {
  public:
    Parser(std::string_view text, const ParseOptions& opts) : toks_(lex(text)), opts_(opts) {}

    Term term() {
        if (peek().kind == Tok::Lambda) return lambda();
        Term t = atom();
        while (starts_atom(peek().kind)) {
            if (peek().kind == Tok::Lambda) return Term::app(t, lambda());
            t = Term::app(t, atom());
        }
        return t;
    }

    Stack stack() {
        std::vector<Term> items;
        while (true) {
            const Token& t = peek();
            if (t.kind == Tok::Ident && is_bottom_name(t.text) && !starts_atom(peek(1).kind) &&
                peek(1).kind != Tok::Dot) {
                ++pos_;
                auto idx = static_cast<std::uint32_t>(std::stoul(t.text.substr(1)));
                return push_all(items, Stack::bottom(idx));
            }
            Term item = term();
            if (!item.closed()) throw ParseError("stack elements must be closed", t.pos);
            items.push_back(item);
            expect(Tok::Dot, "'.' between stack elements");
        }
    }

    Process process() {
        Term head = term();
        if (!head.closed()) throw ParseError("process head must be closed", 0);
        if (peek().kind == Tok::Star) {
            ++pos_;
            return Process{head, stack()};
        }
        return Process{head, Stack::bottom(0)};
    }

    void finish() {
        if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    }

  private:
    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }

    static bool starts_atom(Tok k) {
        return k == Tok::Ident || k == Tok::Cc || k == Tok::InstrA || k == Tok::InstrB || k == Tok::KOpen ||
               k == Tok::LParen || k == Tok::Lambda;
    }

    void expect(Tok k, const char* what) {
        if (peek().kind != k) throw ParseError(std::string("expected ") + what, peek().pos);
        ++pos_;
    }

    Term lambda() {
        expect(Tok::Lambda, "'\\'");
        std::vector<std::string> names;
        while (peek().kind == Tok::Ident) names.push_back(toks_[pos_++].text);
        if (names.empty()) throw ParseError("expected binder name", peek().pos);
        expect(Tok::Dot, "'.' after binder");
        for (const auto& n : names) scope_.push_back(n);
        Term body = term();
        for (auto it = names.rbegin(); it != names.rend(); ++it) {
            scope_.pop_back();
            body = Term::lam_raw(body, *it);
        }
        return body;
    }

    Term atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Ident: {
                ++pos_;
                for (std::size_t i = scope_.size(); i-- > 0;)
                    if (scope_[i] == t.text)
                        return Term::bound(static_cast<std::uint32_t>(scope_.size() - 1 - i), t.text);
                if (opts_.macros) {
                    auto it = opts_.macros->find(t.text);
                    if (it != opts_.macros->end()) return it->second;
                }
                if (!opts_.allow_free) throw ParseError("unbound variable '" + t.text + "'", t.pos);
                return Term::free(t.text);
            }
            case Tok::Cc: ++pos_; return Term::cc();
            case Tok::InstrA: ++pos_; return Term::instr(false, t.number);
            case Tok::InstrB: ++pos_; return Term::instr(true, t.number);
            case Tok::KOpen: {
                ++pos_;
                Stack pi = stack();
                expect(Tok::RBracket, "']'");
                return Term::cont(pi);
            }
            case Tok::LParen: {
                ++pos_;
                Term inner = term();
                expect(Tok::RParen, "')'");
                return inner;
            }
            default:
                throw ParseError(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'",
                                 t.pos);
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const ParseOptions& opts_;
    std::vector<std::string> scope_;
};

// -- printing ---------------------------------------------------------------

void collect_outer_names(const Term& t, std::uint32_t depth, const std::vector<std::string>& names,
                         std::set<std::string>& out) {
    switch (t.kind()) {
        case TermKind::Bound:
            if (t.index() >= depth) {
                std::size_t outer = t.index() - depth;
                if (outer < names.size()) out.insert(names[names.size() - 1 - outer]);
            }
            break;
        case TermKind::Free: out.insert(t.name()); break;
        case TermKind::App:
            collect_outer_names(t.fun(), depth, names, out);
            collect_outer_names(t.arg(), depth, names, out);
            break;
        case TermKind::Lam: collect_outer_names(t.body(), depth + 1, names, out); break;
        default: break;
    }
}

bool usable_name(const std::string& n) {
    return !n.empty() && ident_start(n[0]) && n != "cc" && !is_bottom_name(n) &&
           std::all_of(n.begin(), n.end(), ident_char);
}

void print_term(const Term& t, std::vector<std::string>& names, std::string& out);

void print_stack(const Stack& s, std::string& out) {
    for (Stack cur = s; !cur.is_bottom(); cur = cur.tail()) {
        const Term& h = cur.head();
        std::vector<std::string> names;
        bool paren = h.kind() == TermKind::App || h.kind() == TermKind::Lam;
        if (paren) out += '(';
        print_term(h, names, out);
        if (paren) out += ')';
        out += " . ";
    }
    out += 'e';
    out += std::to_string(s.bottom_index());
}

void print_term(const Term& t, std::vector<std::string>& names, std::string& out) {
    switch (t.kind()) {
        case TermKind::Bound:
            if (t.index() < names.size())
                out += names[names.size() - 1 - t.index()];
            else
                out += "?" + std::to_string(t.index() - names.size());
            break;
        case TermKind::Free: out += t.name(); break;
        case TermKind::Cc: out += "cc"; break;
        case TermKind::Instr:
            out += t.restricted() ? "#b" : "#a";
            out += std::to_string(t.index());
            break;
        case TermKind::Cont:
            out += "k[";
            print_stack(t.stack(), out);
            out += ']';
            break;
        case TermKind::App: {
            const Term& f = t.fun();
            bool fparen = f.kind() == TermKind::Lam;
            if (fparen) out += '(';
            print_term(f, names, out);
            if (fparen) out += ')';
            out += ' ';
            const Term& a = t.arg();
            bool aparen = a.kind() == TermKind::App || a.kind() == TermKind::Lam;
            if (aparen) out += '(';
            print_term(a, names, out);
            if (aparen) out += ')';
            break;
        }
        case TermKind::Lam: {
            std::string base = usable_name(t.name()) ? t.name() : "x" + std::to_string(names.size());
            std::set<std::string> taken;
            collect_outer_names(t.body(), 1, names, taken);
            std::string chosen = base;
            for (int k = 1; taken.count(chosen); ++k) chosen = base + "_" + std::to_string(k);
            out += '\\';
            out += chosen;
            out += ". ";
            names.push_back(chosen);
            print_term(t.body(), names, out);
            names.pop_back();
            break;
        }
    }
}

}  // namespace

Term parse_term(std::string_view text, const ParseOptions& opts) {
    Parser p(text, opts);
    Term t = p.term();
    p.finish();
    return t;
}

Stack parse_stack(std::string_view text, const ParseOptions& opts) {
    Parser p(text, opts);
    Stack s = p.stack();
    p.finish();
    return s;
}

Process parse_process(std::string_view text, const ParseOptions& opts) {
    Parser p(text, opts);
    Process pr = p.process();
    p.finish();
    return pr;
}

std::string print(const Term& t) {
    std::string out;
    std::vector<std::string> names;
    print_term(t, names, out);
    return out;
}

std::string print(const Stack& s) {
    std::string out;
    print_stack(s, out);
    return out;
}

std::string print(const Process& p) {
    std::string out;
    std::vector<std::string> names;
    print_term(p.head, names, out);
    out += " * ";
    print_stack(p.stack, out);
    return out;
}

}  // namespace lcr
