#include "lcr/logic.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace lcr {

// -- first-order terms --------------------------------------------------------

struct FONode {
    FOTerm::Kind kind;
    std::string name;
    std::vector<FOTerm> args;
};

FOTerm FOTerm::variable(std::string name) {
    return FOTerm(std::make_shared<FONode>(FONode{Kind::Var, std::move(name), {}}));
}

FOTerm FOTerm::apply(std::string fn, std::vector<FOTerm> args) {
    return FOTerm(std::make_shared<FONode>(FONode{Kind::Apply, std::move(fn), std::move(args)}));
}

FOTerm FOTerm::numeral(std::uint64_t n) {
    FOTerm t = apply("0");
    for (std::uint64_t i = 0; i < n; ++i) t = apply("s", {t});
    return t;
}

FOTerm::Kind FOTerm::kind() const { return node_->kind; }
const std::string& FOTerm::name() const { return node_->name; }
const std::vector<FOTerm>& FOTerm::args() const { return node_->args; }

std::optional<std::uint64_t> FOTerm::as_numeral() const {
    std::uint64_t n = 0;
    const FOTerm* cur = this;
    while (cur->kind() == Kind::Apply && cur->name() == "s" && cur->args().size() == 1) {
        ++n;
        cur = &cur->args()[0];
    }
    if (cur->kind() == Kind::Apply && cur->name() == "0" && cur->args().empty()) return n;
    return std::nullopt;
}

bool operator==(const FOTerm& a, const FOTerm& b) {
    if (a.node_ == b.node_) return true;
    return a.kind() == b.kind() && a.name() == b.name() && a.args() == b.args();
}

bool operator<(const FOTerm& a, const FOTerm& b) {
    if (a.kind() != b.kind()) return a.kind() < b.kind();
    if (a.name() != b.name()) return a.name() < b.name();
    return a.args() < b.args();
}

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b) throw LogicError("arithmetic overflow");
    return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) throw LogicError("arithmetic overflow");
    return a * b;
}

FunctionRegistry make_standard() {
    FunctionRegistry r;
    using V = std::vector<std::uint64_t>;
    r.define("0", 0, [](const V&) { return std::uint64_t{0}; });
    r.define("s", 1, [](const V& v) { return checked_add(v[0], 1); });
    r.define("+", 2, [](const V& v) { return checked_add(v[0], v[1]); });
    r.define("*", 2, [](const V& v) { return checked_mul(v[0], v[1]); });
    r.define("min", 2, [](const V& v) { return std::min(v[0], v[1]); });
    r.define("max", 2, [](const V& v) { return std::max(v[0], v[1]); });
    r.define("|", 2, [](const V& v) { return std::uint64_t(v[0] > 0 || v[1] > 0); });
    r.define("&", 2, [](const V& v) { return std::uint64_t(v[0] > 0 && v[1] > 0); });
    r.define("~", 1, [](const V& v) { return std::uint64_t(v[0] == 0); });
    return r;
}

}  // namespace

const FunctionRegistry& FunctionRegistry::standard() {
    static const FunctionRegistry reg = make_standard();
    return reg;
}

void FunctionRegistry::define(std::string name, std::size_t arity, Fn fn) {
    fns_[std::move(name)] = Entry{arity, std::move(fn)};
}

std::size_t FunctionRegistry::arity(const std::string& name) const {
    auto it = fns_.find(name);
    if (it == fns_.end()) throw LogicError("unknown function symbol " + name);
    return it->second.arity;
}

std::uint64_t FunctionRegistry::call(const std::string& name, const std::vector<std::uint64_t>& args) const {
    auto it = fns_.find(name);
    if (it == fns_.end()) throw LogicError("unknown function symbol " + name);
    if (it->second.arity != args.size())
        throw LogicError("function " + name + " expects " + std::to_string(it->second.arity) + " arguments");
    return it->second.fn(args);
}

std::uint64_t fo_value(const FOTerm& a, const std::map<std::string, std::uint64_t>& env, const FunctionRegistry& reg) {
    if (a.kind() == FOTerm::Kind::Var) {
        auto it = env.find(a.name());
        if (it == env.end()) throw LogicError("unbound first-order variable " + a.name());
        return it->second;
    }
    if (auto n = a.as_numeral()) return *n;
    std::vector<std::uint64_t> vals;
    for (const auto& b : a.args()) vals.push_back(fo_value(b, env, reg));
    return reg.call(a.name(), vals);
}

void check_symbols(const FOTerm& a, const FunctionRegistry& reg) {
    if (a.kind() == FOTerm::Kind::Var) return;
    if (reg.arity(a.name()) != a.args().size())
        throw LogicError("function " + a.name() + " expects " + std::to_string(reg.arity(a.name())) + " arguments");
    for (const auto& b : a.args()) check_symbols(b, reg);
}

FOTerm subst_fo(const FOTerm& a, const std::string& x, const FOTerm& b) {
    if (a.kind() == FOTerm::Kind::Var) return a.name() == x ? b : a;
    std::vector<FOTerm> args;
    bool changed = false;
    for (const auto& c : a.args()) {
        args.push_back(subst_fo(c, x, b));
        changed = changed || !(args.back() == c);
    }
    return changed ? FOTerm::apply(a.name(), std::move(args)) : a;
}

void fo_vars(const FOTerm& a, std::vector<std::string>& out) {
    if (a.kind() == FOTerm::Kind::Var) {
        if (std::find(out.begin(), out.end(), a.name()) == out.end()) out.push_back(a.name());
        return;
    }
    for (const auto& b : a.args()) fo_vars(b, out);
}

// -- formulas -----------------------------------------------------------------

struct FormulaNode {
    FormulaKind kind;
    std::string name;
    std::size_t arity = 0;
    std::vector<FOTerm> args;
    Formula left, right;
};

Formula Formula::atom(std::string pred, std::vector<FOTerm> args) {
    return Formula(std::make_shared<FormulaNode>(FormulaNode{FormulaKind::Atom, std::move(pred), 0, std::move(args), {}, {}}));
}
Formula Formula::top() {
    static const Formula t(std::make_shared<FormulaNode>(FormulaNode{FormulaKind::Top, {}, 0, {}, {}, {}}));
    return t;
}
Formula Formula::bot() {
    static const Formula b(std::make_shared<FormulaNode>(FormulaNode{FormulaKind::Bot, {}, 0, {}, {}, {}}));
    return b;
}
Formula Formula::imp(Formula a, Formula b) {
    return Formula(std::make_shared<FormulaNode>(FormulaNode{FormulaKind::Imp, {}, 0, {}, std::move(a), std::move(b)}));
}
Formula Formula::forall(std::string x, Formula body) {
    return Formula(std::make_shared<FormulaNode>(FormulaNode{FormulaKind::Forall1, std::move(x), 0, {}, std::move(body), {}}));
}
Formula Formula::forall2(std::string pred, std::size_t arity, Formula body) {
    return Formula(
        std::make_shared<FormulaNode>(FormulaNode{FormulaKind::Forall2, std::move(pred), arity, {}, std::move(body), {}}));
}
Formula Formula::eq_imp(FOTerm a, FOTerm b, Formula body) {
    return Formula(std::make_shared<FormulaNode>(
        FormulaNode{FormulaKind::EqImp, {}, 0, {std::move(a), std::move(b)}, std::move(body), {}}));
}
Formula Formula::cap(Formula a, Formula b) {
    return Formula(std::make_shared<FormulaNode>(FormulaNode{FormulaKind::Cap, {}, 0, {}, std::move(a), std::move(b)}));
}
Formula Formula::cup(Formula a, Formula b) {
    return Formula(std::make_shared<FormulaNode>(FormulaNode{FormulaKind::Cup, {}, 0, {}, std::move(a), std::move(b)}));
}
Formula Formula::constant(std::string table, std::vector<FOTerm> args) {
    return Formula(std::make_shared<FormulaNode>(FormulaNode{FormulaKind::Const, std::move(table), 0, std::move(args), {}, {}}));
}

FormulaKind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
std::size_t Formula::arity() const { return node_->arity; }
const std::vector<FOTerm>& Formula::args() const { return node_->args; }
const Formula& Formula::left() const { return node_->left; }
const Formula& Formula::right() const { return node_->right; }

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    return x.kind == y.kind && x.name == y.name && x.arity == y.arity && x.args == y.args && x.left == y.left &&
           x.right == y.right;
}

Formula imps(const std::vector<Formula>& premises, Formula conclusion) {
    for (auto it = premises.rbegin(); it != premises.rend(); ++it) conclusion = Formula::imp(*it, conclusion);
    return conclusion;
}

Formula caps(const std::vector<Formula>& parts) {
    if (parts.empty()) return Formula::top();
    Formula acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) acc = Formula::cap(acc, parts[i]);
    return acc;
}

namespace {

using Scope = std::vector<std::pair<std::string, std::string>>;

bool term_alpha(const FOTerm& a, const FOTerm& b, const Scope& s) {
    if (a.kind() != b.kind()) return false;
    if (a.kind() == FOTerm::Kind::Var) {
        for (auto it = s.rbegin(); it != s.rend(); ++it) {
            bool l = it->first == a.name(), r = it->second == b.name();
            if (l || r) return l && r;
        }
        return a.name() == b.name();
    }
    if (a.name() != b.name() || a.args().size() != b.args().size()) return false;
    for (std::size_t i = 0; i < a.args().size(); ++i)
        if (!term_alpha(a.args()[i], b.args()[i], s)) return false;
    return true;
}

bool pred_alpha(const std::string& a, const std::string& b, const Scope& s) {
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
        bool l = it->first == a, r = it->second == b;
        if (l || r) return l && r;
    }
    return a == b;
}

bool alpha(const Formula& a, const Formula& b, Scope& fo, Scope& so) {
    if (a.kind() != b.kind()) return false;
    auto args_alpha = [&] {
        if (a.args().size() != b.args().size()) return false;
        for (std::size_t i = 0; i < a.args().size(); ++i)
            if (!term_alpha(a.args()[i], b.args()[i], fo)) return false;
        return true;
    };
    switch (a.kind()) {
        case FormulaKind::Top:
        case FormulaKind::Bot: return true;
        case FormulaKind::Atom: return pred_alpha(a.name(), b.name(), so) && args_alpha();
        case FormulaKind::Const: return a.name() == b.name() && args_alpha();
        case FormulaKind::Imp:
        case FormulaKind::Cap:
        case FormulaKind::Cup: return alpha(a.left(), b.left(), fo, so) && alpha(a.right(), b.right(), fo, so);
        case FormulaKind::EqImp: return args_alpha() && alpha(a.body(), b.body(), fo, so);
        case FormulaKind::Forall1: {
            fo.emplace_back(a.name(), b.name());
            bool r = alpha(a.body(), b.body(), fo, so);
            fo.pop_back();
            return r;
        }
        case FormulaKind::Forall2: {
            if (a.arity() != b.arity()) return false;
            so.emplace_back(a.name(), b.name());
            bool r = alpha(a.body(), b.body(), fo, so);
            so.pop_back();
            return r;
        }
    }
    return false;
}

void collect_fo(const Formula& a, std::set<std::string>& bound, std::set<std::string>& out) {
    auto from_terms = [&] {
        std::vector<std::string> vs;
        for (const auto& t : a.args()) fo_vars(t, vs);
        for (auto& v : vs)
            if (!bound.count(v)) out.insert(v);
    };
    switch (a.kind()) {
        case FormulaKind::Top:
        case FormulaKind::Bot: break;
        case FormulaKind::Atom:
        case FormulaKind::Const: from_terms(); break;
        case FormulaKind::EqImp:
            from_terms();
            collect_fo(a.body(), bound, out);
            break;
        case FormulaKind::Imp:
        case FormulaKind::Cap:
        case FormulaKind::Cup:
            collect_fo(a.left(), bound, out);
            collect_fo(a.right(), bound, out);
            break;
        case FormulaKind::Forall1: {
            bool had = bound.count(a.name());
            bound.insert(a.name());
            collect_fo(a.body(), bound, out);
            if (!had) bound.erase(a.name());
            break;
        }
        case FormulaKind::Forall2: collect_fo(a.body(), bound, out); break;
    }
}

void collect_so(const Formula& a, std::set<std::string>& bound, std::map<std::string, std::size_t>& out) {
    switch (a.kind()) {
        case FormulaKind::Atom:
            if (!bound.count(a.name())) out.emplace(a.name(), a.args().size());
            break;
        case FormulaKind::EqImp: collect_so(a.body(), bound, out); break;
        case FormulaKind::Imp:
        case FormulaKind::Cap:
        case FormulaKind::Cup:
            collect_so(a.left(), bound, out);
            collect_so(a.right(), bound, out);
            break;
        case FormulaKind::Forall1: collect_so(a.body(), bound, out); break;
        case FormulaKind::Forall2: {
            bool had = bound.count(a.name());
            bound.insert(a.name());
            collect_so(a.body(), bound, out);
            if (!had) bound.erase(a.name());
            break;
        }
        default: break;
    }
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
    if (!avoid.count(base)) return base;
    for (int i = 1;; ++i) {
        std::string c = base + std::to_string(i);
        if (!avoid.count(c)) return c;
    }
}

std::set<std::string> fo_set(const Formula& a) {
    auto v = free_fo_vars(a);
    return {v.begin(), v.end()};
}

std::set<std::string> so_set(const Formula& a) {
    std::set<std::string> out;
    for (auto& [n, k] : free_pred_vars(a)) out.insert(n);
    return out;
}

// All binder names used anywhere in a, so renamings never clash with them.
void all_names(const Formula& a, std::set<std::string>& out) {
    switch (a.kind()) {
        case FormulaKind::Forall1:
        case FormulaKind::Forall2:
            out.insert(a.name());
            all_names(a.body(), out);
            break;
        case FormulaKind::Atom: out.insert(a.name()); [[fallthrough]];
        case FormulaKind::Const: {
            std::vector<std::string> vs;
            for (const auto& t : a.args()) fo_vars(t, vs);
            out.insert(vs.begin(), vs.end());
            break;
        }
        case FormulaKind::EqImp: {
            std::vector<std::string> vs;
            for (const auto& t : a.args()) fo_vars(t, vs);
            out.insert(vs.begin(), vs.end());
            all_names(a.body(), out);
            break;
        }
        case FormulaKind::Imp:
        case FormulaKind::Cap:
        case FormulaKind::Cup:
            all_names(a.left(), out);
            all_names(a.right(), out);
            break;
        default: break;
    }
}

std::vector<FOTerm> map_terms(const std::vector<FOTerm>& ts, const std::string& x, const FOTerm& b) {
    std::vector<FOTerm> out;
    for (const auto& t : ts) out.push_back(subst_fo(t, x, b));
    return out;
}

}  // namespace

bool alpha_equal(const Formula& a, const Formula& b) {
    Scope fo, so;
    return alpha(a, b, fo, so);
}

std::vector<std::string> free_fo_vars(const Formula& a) {
    std::set<std::string> bound, out;
    collect_fo(a, bound, out);
    return {out.begin(), out.end()};
}

std::vector<std::pair<std::string, std::size_t>> free_pred_vars(const Formula& a) {
    std::set<std::string> bound;
    std::map<std::string, std::size_t> out;
    collect_so(a, bound, out);
    return {out.begin(), out.end()};
}

bool is_closed(const Formula& a) { return free_fo_vars(a).empty() && free_pred_vars(a).empty(); }

Formula subst_fo(const Formula& a, const std::string& x, const FOTerm& b) {
    switch (a.kind()) {
        case FormulaKind::Top:
        case FormulaKind::Bot: return a;
        case FormulaKind::Atom: return Formula::atom(a.name(), map_terms(a.args(), x, b));
        case FormulaKind::Const: return Formula::constant(a.name(), map_terms(a.args(), x, b));
        case FormulaKind::EqImp:
            return Formula::eq_imp(subst_fo(a.args()[0], x, b), subst_fo(a.args()[1], x, b), subst_fo(a.body(), x, b));
        case FormulaKind::Imp: return Formula::imp(subst_fo(a.left(), x, b), subst_fo(a.right(), x, b));
        case FormulaKind::Cap: return Formula::cap(subst_fo(a.left(), x, b), subst_fo(a.right(), x, b));
        case FormulaKind::Cup: return Formula::cup(subst_fo(a.left(), x, b), subst_fo(a.right(), x, b));
        case FormulaKind::Forall2: return Formula::forall2(a.name(), a.arity(), subst_fo(a.body(), x, b));
        case FormulaKind::Forall1: {
            if (a.name() == x) return a;
            std::vector<std::string> bv;
            fo_vars(b, bv);
            auto body_free = fo_set(a.body());
            if (!body_free.count(x)) return a;
            if (std::find(bv.begin(), bv.end(), a.name()) == bv.end())
                return Formula::forall(a.name(), subst_fo(a.body(), x, b));
            std::set<std::string> avoid(bv.begin(), bv.end());
            all_names(a.body(), avoid);
            avoid.insert(x);
            std::string y = fresh_name(a.name(), avoid);
            Formula renamed = subst_fo(a.body(), a.name(), FOTerm::variable(y));
            return Formula::forall(y, subst_fo(renamed, x, b));
        }
    }
    return a;
}

Formula subst_pred(const Formula& a, const std::string& pred, const std::vector<std::string>& params, const Formula& b) {
    auto rec = [&](const Formula& f) { return subst_pred(f, pred, params, b); };
    switch (a.kind()) {
        case FormulaKind::Top:
        case FormulaKind::Bot:
        case FormulaKind::Const: return a;
        case FormulaKind::Atom: {
            if (a.name() != pred) return a;
            if (a.args().size() != params.size())
                throw LogicError("predicate " + pred + " used with " + std::to_string(a.args().size()) +
                                 " arguments, substitution expects " + std::to_string(params.size()));
            // simultaneous: move parameters to fresh names first
            std::set<std::string> avoid;
            all_names(b, avoid);
            for (const auto& t : a.args()) {
                std::vector<std::string> vs;
                fo_vars(t, vs);
                avoid.insert(vs.begin(), vs.end());
            }
            Formula r = b;
            std::vector<std::string> tmp;
            for (const auto& p : params) {
                std::string z = fresh_name("p_", avoid);
                avoid.insert(z);
                tmp.push_back(z);
                r = subst_fo(r, p, FOTerm::variable(z));
            }
            for (std::size_t i = 0; i < params.size(); ++i) r = subst_fo(r, tmp[i], a.args()[i]);
            return r;
        }
        case FormulaKind::EqImp: return Formula::eq_imp(a.args()[0], a.args()[1], rec(a.body()));
        case FormulaKind::Imp: return Formula::imp(rec(a.left()), rec(a.right()));
        case FormulaKind::Cap: return Formula::cap(rec(a.left()), rec(a.right()));
        case FormulaKind::Cup: return Formula::cup(rec(a.left()), rec(a.right()));
        case FormulaKind::Forall1: {
            auto bfree = fo_set(b);
            for (const auto& p : params) bfree.erase(p);
            auto so = so_set(a.body());
            if (!so.count(pred)) return a;
            if (!bfree.count(a.name())) return Formula::forall(a.name(), rec(a.body()));
            std::set<std::string> avoid = bfree;
            all_names(a.body(), avoid);
            all_names(b, avoid);
            std::string y = fresh_name(a.name(), avoid);
            return Formula::forall(y, rec(subst_fo(a.body(), a.name(), FOTerm::variable(y))));
        }
        case FormulaKind::Forall2: {
            if (a.name() == pred) return a;
            auto so = so_set(a.body());
            if (!so.count(pred)) return a;
            if (!so_set(b).count(a.name())) return Formula::forall2(a.name(), a.arity(), rec(a.body()));
            std::set<std::string> avoid = so_set(b);
            all_names(a.body(), avoid);
            all_names(b, avoid);
            avoid.insert(pred);
            std::string y = fresh_name(a.name(), avoid);
            std::vector<std::string> ps;
            std::vector<FOTerm> pv;
            for (std::size_t i = 0; i < a.arity(); ++i) {
                ps.push_back("q" + std::to_string(i));
                pv.push_back(FOTerm::variable(ps.back()));
            }
            Formula renamed = subst_pred(a.body(), a.name(), ps, Formula::atom(y, pv));
            return Formula::forall2(y, a.arity(), rec(renamed));
        }
    }
    return a;
}

namespace {

void check_rec(const Formula& a, const FunctionRegistry& reg, std::map<std::string, std::size_t>& arities,
               std::vector<std::pair<std::string, std::size_t>>& bound) {
    auto terms = [&] {
        for (const auto& t : a.args()) check_symbols(t, reg);
    };
    switch (a.kind()) {
        case FormulaKind::Atom: {
            terms();
            for (auto it = bound.rbegin(); it != bound.rend(); ++it)
                if (it->first == a.name()) {
                    if (it->second != a.args().size())
                        throw LogicError("predicate " + a.name() + " bound with arity " + std::to_string(it->second) +
                                         " but applied to " + std::to_string(a.args().size()) + " arguments");
                    return;
                }
            auto [pos, fresh] = arities.emplace(a.name(), a.args().size());
            if (!fresh && pos->second != a.args().size())
                throw LogicError("free predicate " + a.name() + " used with inconsistent arities");
            return;
        }
        case FormulaKind::Const:
        case FormulaKind::EqImp:
            terms();
            if (a.kind() == FormulaKind::EqImp) check_rec(a.body(), reg, arities, bound);
            return;
        case FormulaKind::Imp:
        case FormulaKind::Cap:
        case FormulaKind::Cup:
            check_rec(a.left(), reg, arities, bound);
            check_rec(a.right(), reg, arities, bound);
            return;
        case FormulaKind::Forall1: check_rec(a.body(), reg, arities, bound); return;
        case FormulaKind::Forall2:
            bound.emplace_back(a.name(), a.arity());
            check_rec(a.body(), reg, arities, bound);
            bound.pop_back();
            return;
        default: return;
    }
}

FOTerm v(const std::string& x) { return FOTerm::variable(x); }

}  // namespace

void check_formula(const Formula& a, const FunctionRegistry& reg) {
    std::map<std::string, std::size_t> arities;
    std::vector<std::pair<std::string, std::size_t>> bound;
    check_rec(a, reg, arities, bound);
}

// -- derived connectives ------------------------------------------------------

Formula eq(const FOTerm& a, const FOTerm& b) {
    return Formula::forall2("Z", 1, Formula::imp(Formula::atom("Z", {a}), Formula::atom("Z", {b})));
}

Formula neq(const FOTerm& a, const FOTerm& b) { return Formula::eq_imp(a, b, Formula::bot()); }

namespace {

std::string fresh_pred(const std::vector<Formula>& fs) {
    std::set<std::string> avoid;
    for (const auto& f : fs) all_names(f, avoid);
    return fresh_name("Z", avoid);
}

std::string fresh_fo(const std::string& base, const FOTerm& t) {
    std::vector<std::string> vs;
    fo_vars(t, vs);
    return fresh_name(base, {vs.begin(), vs.end()});
}

}  // namespace

Formula conj(const Formula& a, const Formula& b) {
    std::string z = fresh_pred({a, b});
    Formula Z = Formula::atom(z);
    return Formula::forall2(z, 0, Formula::imp(imps({a, b}, Z), Z));
}

Formula disj(const Formula& a, const Formula& b) {
    std::string z = fresh_pred({a, b});
    Formula Z = Formula::atom(z);
    return Formula::forall2(z, 0, imps({Formula::imp(a, Z), Formula::imp(b, Z)}, Z));
}

Formula neg(const Formula& a) { return Formula::imp(a, Formula::bot()); }

Formula iff(const Formula& a, const Formula& b) { return conj(Formula::imp(a, b), Formula::imp(b, a)); }

Formula exists(const std::string& x, const Formula& a) {
    std::string z = fresh_pred({a});
    Formula Z = Formula::atom(z);
    return Formula::forall2(z, 0, Formula::imp(Formula::forall(x, Formula::imp(a, Z)), Z));
}

Formula exists2(const std::string& pred, std::size_t arity, const Formula& a) {
    std::set<std::string> avoid;
    all_names(a, avoid);
    avoid.insert(pred);
    std::string z = fresh_name("Z", avoid);
    Formula Z = Formula::atom(z);
    return Formula::forall2(z, 0, Formula::imp(Formula::forall2(pred, arity, Formula::imp(a, Z)), Z));
}

std::pair<FOTerm, FOTerm> gim_equation(std::uint64_t n, const FOTerm& a) {
    FOTerm succ = FOTerm::apply("s", {a});
    return {FOTerm::apply("min", {succ, FOTerm::numeral(n)}), succ};
}

Formula gim(std::uint64_t n, const FOTerm& a) {
    auto [l, r] = gim_equation(n, a);
    return eq(l, r);
}

Formula forall_gim(std::uint64_t n, const std::string& x, const Formula& a) {
    auto [l, r] = gim_equation(n, v(x));
    return Formula::forall(x, Formula::eq_imp(l, r, a));
}

Formula relativize(std::uint64_t n, const Formula& a) {
    auto rec = [n](const Formula& f) { return relativize(n, f); };
    switch (a.kind()) {
        case FormulaKind::Forall1: return forall_gim(n, a.name(), rec(a.body()));
        case FormulaKind::Forall2: return Formula::forall2(a.name(), a.arity(), rec(a.body()));
        case FormulaKind::EqImp: return Formula::eq_imp(a.args()[0], a.args()[1], rec(a.body()));
        case FormulaKind::Imp: return Formula::imp(rec(a.left()), rec(a.right()));
        case FormulaKind::Cap: return Formula::cap(rec(a.left()), rec(a.right()));
        case FormulaKind::Cup: return Formula::cup(rec(a.left()), rec(a.right()));
        default: return a;
    }
}

Formula bool_f(const FOTerm& y) {
    auto X = [](FOTerm t) { return Formula::atom("X", {std::move(t)}); };
    return Formula::forall2("X", 1, imps({X(FOTerm::numeral(0)), X(FOTerm::numeral(1))}, X(y)));
}

Formula nat_f(const FOTerm& x) {
    std::string y = fresh_fo("y", x);
    auto Z = [](FOTerm t) { return Formula::atom("Z", {std::move(t)}); };
    Formula step = Formula::forall(y, Formula::imp(Z(v(y)), Z(FOTerm::apply("s", {v(y)}))));
    return Formula::forall2("Z", 1, imps({step, Z(FOTerm::numeral(0))}, Z(x)));
}

Formula desugar(const std::string& c, const std::vector<Formula>& fs, const std::vector<FOTerm>& ts,
                const std::vector<std::string>& names, std::uint64_t n) {
    auto need = [&](std::size_t nf, std::size_t nt, std::size_t nn) {
        if (fs.size() != nf || ts.size() != nt || names.size() != nn)
            throw LogicError("connective " + c + ": wrong number of arguments");
    };
    if (c == "=") return need(0, 2, 0), eq(ts[0], ts[1]);
    if (c == "!=") return need(0, 2, 0), neq(ts[0], ts[1]);
    if (c == "and") return need(2, 0, 0), conj(fs[0], fs[1]);
    if (c == "or") return need(2, 0, 0), disj(fs[0], fs[1]);
    if (c == "not") return need(1, 0, 0), neg(fs[0]);
    if (c == "iff") return need(2, 0, 0), iff(fs[0], fs[1]);
    if (c == "ex") return need(1, 0, 1), exists(names[0], fs[0]);
    if (c == "ex2") return need(1, 0, 1), exists2(names[0], n, fs[0]);
    if (c == "forall-gim") return need(1, 0, 1), forall_gim(n, names[0], fs[0]);
    throw LogicError("unknown connective " + c);
}

}  // namespace lcr
