// Reader and printer for derivation files; grammar in adequacy.hpp.

#include <cctype>
#include <sstream>

#include "lcr/adequacy.hpp"

namespace lcr {

namespace {

struct Sexp {
    bool is_list = false;
    bool is_string = false;
    std::string atom;
    std::vector<Sexp> items;
    std::size_t pos = 0;
};

class Reader {
  public:
    explicit Reader(const std::string& s) : s_(s) {}

    Sexp read() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        Sexp e;
        e.pos = i_;
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            e.is_list = true;
            while (true) {
                skip();
                if (i_ >= s_.size()) fail("missing ')'");
                if (s_[i_] == ')') {
                    ++i_;
                    break;
                }
                e.items.push_back(read());
            }
        } else if (c == ')') {
            fail("unexpected ')'");
        } else if (c == '"') {
            ++i_;
            e.is_string = true;
            while (true) {
                if (i_ >= s_.size()) fail("unterminated string");
                if (s_[i_] == '\\' && i_ + 1 < s_.size() && s_[i_ + 1] == '"') {
                    e.atom += '"';
                    i_ += 2;
                    continue;
                }
                if (s_[i_] == '"') {
                    ++i_;
                    break;
                }
                e.atom += s_[i_++];
            }
        } else {
            while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) && s_[i_] != '(' &&
                   s_[i_] != ')' && s_[i_] != '"' && s_[i_] != ';')
                e.atom += s_[i_++];
        }
        return e;
    }

    bool at_end() {
        skip();
        return i_ >= s_.size();
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw DerivationParseError(msg + " at offset " + std::to_string(i_));
    }

  private:
    void skip() {
        while (i_ < s_.size()) {
            if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
                ++i_;
            } else if (s_[i_] == ';') {
                while (i_ < s_.size() && s_[i_] != '\n') ++i_;
            } else {
                break;
            }
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

[[noreturn]] void bad(const Sexp& e, const std::string& msg) {
    throw DerivationParseError(msg + " at offset " + std::to_string(e.pos));
}

const std::string& string_of(const Sexp& e, const char* what) {
    if (e.is_list || !e.is_string) bad(e, std::string("expected a string for ") + what);
    return e.atom;
}

const std::string& name_of(const Sexp& e, const char* what) {
    if (e.is_list || e.atom.empty()) bad(e, std::string("expected a name for ") + what);
    return e.atom;
}

template <class F>
auto parsed(const Sexp& e, F f) {
    try {
        return f();
    } catch (const std::exception& ex) {
        bad(e, ex.what());
    }
}

Derivation to_derivation(const Sexp& e) {
    if (!e.is_list || e.items.size() < 2 || e.items[0].atom != "deriv") bad(e, "expected (deriv RULE ...)");
    Derivation d;
    auto rule = parse_deriv_rule(e.items[1].atom);
    if (!rule) bad(e.items[1], "unknown rule " + e.items[1].atom);
    d.rule = *rule;
    ParseOptions opts;
    opts.allow_free = true;
    for (std::size_t i = 2; i < e.items.size(); ++i) {
        const Sexp& it = e.items[i];
        if (!it.is_list || it.items.empty()) bad(it, "expected a (key ...) item");
        const std::string& key = it.items[0].atom;
        auto one = [&]() -> const Sexp& {
            if (it.items.size() != 2) bad(it, key + " takes one argument");
            return it.items[1];
        };
        if (key == "ctx") {
            for (std::size_t k = 1; k < it.items.size(); ++k) {
                const Sexp& h = it.items[k];
                if (!h.is_list || h.items.size() != 2) bad(h, "expected (name \"formula\")");
                const Sexp& f = h.items[1];
                d.ctx.push_back({name_of(h.items[0], "hypothesis"),
                                 parsed(f, [&]() { return parse_formula(string_of(f, "formula")); })});
            }
        } else if (key == "term") {
            const Sexp& t = one();
            d.term = parsed(t, [&]() { return parse_term(string_of(t, "term"), opts); });
        } else if (key == "formula") {
            const Sexp& f = one();
            d.formula = parsed(f, [&]() { return parse_formula(string_of(f, "formula")); });
        } else if (key == "witness") {
            const Sexp& w = one();
            d.witness = parsed(w, [&]() { return parse_fo_term(string_of(w, "witness")); });
        } else if (key == "pred") {
            const Sexp& p = one();
            d.pred = parsed(p, [&]() { return parse_formula(string_of(p, "pred")); });
        } else if (key == "eigen") {
            d.eigen = name_of(one(), "eigen");
        } else if (key == "params") {
            for (std::size_t k = 1; k < it.items.size(); ++k) d.params.push_back(name_of(it.items[k], "params"));
        } else if (key == "premises") {
            for (std::size_t k = 1; k < it.items.size(); ++k) d.premises.push_back(to_derivation(it.items[k]));
        } else {
            bad(it, "unknown item " + key);
        }
    }
    if (!d.term.valid()) bad(e, "missing (term ...)");
    if (!d.formula.valid()) bad(e, "missing (formula ...)");
    return d;
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '\\';
        out += c;
    }
    return out + "\"";
}

void write(std::ostream& os, const Derivation& d, int indent) {
    std::string pad(indent, ' ');
    os << pad << "(deriv " << to_string(d.rule);
    if (!d.ctx.empty()) {
        os << " (ctx";
        for (const auto& h : d.ctx) os << " (" << h.var << " " << quoted(print(h.type)) << ")";
        os << ")";
    }
    os << "\n" << pad << "  (term " << quoted(print(d.term)) << ") (formula " << quoted(print(d.formula)) << ")";
    if (d.witness) os << " (witness " << quoted(print(*d.witness)) << ")";
    if (!d.params.empty()) {
        os << " (params";
        for (const auto& p : d.params) os << " " << p;
        os << ")";
    }
    if (d.pred) os << " (pred " << quoted(print(*d.pred)) << ")";
    if (d.eigen) os << " (eigen " << *d.eigen << ")";
    if (!d.premises.empty()) {
        os << "\n" << pad << "  (premises\n";
        for (const auto& p : d.premises) write(os, p, indent + 4);
        os << pad << "  )";
    }
    os << ")\n";
}

}  // namespace

Derivation parse_derivation(const std::string& text) {
    Reader r(text);
    Sexp e = r.read();
    if (!r.at_end()) r.fail("trailing input after the derivation");
    return to_derivation(e);
}

std::string print_derivation(const Derivation& d) {
    std::ostringstream os;
    write(os, d, 0);
    return os.str();
}

}  // namespace lcr
