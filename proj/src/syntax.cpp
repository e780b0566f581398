#include "lcr/syntax.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

namespace lcr {

struct TermNode {
    TermKind kind;
    std::uint32_t index = 0;
    bool restricted = false;
    std::string name;
    Term a;  // App fun, Lam body
    Term b;  // App arg
    Stack stack;
    std::size_t hash = 0;
    std::size_t size = 1;
    std::uint32_t open_depth = 0;
    bool has_free = false;
};

struct StackNode {
    bool bottom = true;
    std::uint32_t index = 0;
    Term head;
    Stack tail;
    std::size_t hash = 0;
    std::size_t size = 1;
    std::size_t length = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

// -- Term -------------------------------------------------------------------

Term Term::bound(std::uint32_t index, std::string display) {
    auto n = std::make_shared<TermNode>();
    n->kind = TermKind::Bound;
    n->index = index;
    n->name = std::move(display);
    n->hash = mix(1, index);
    n->open_depth = index + 1;
    return Term(std::move(n));
}

Term Term::free(std::string name) {
    auto n = std::make_shared<TermNode>();
    n->kind = TermKind::Free;
    n->hash = mix(2, std::hash<std::string>{}(name));
    n->name = std::move(name);
    n->has_free = true;
    return Term(std::move(n));
}

Term Term::app(Term fun, Term arg) {
    assert(fun.valid() && arg.valid());
    auto n = std::make_shared<TermNode>();
    n->kind = TermKind::App;
    n->hash = mix(mix(3, fun.hash()), arg.hash());
    n->size = 1 + fun.size() + arg.size();
    n->open_depth = std::max(fun.open_depth(), arg.open_depth());
    n->has_free = fun.has_free() || arg.has_free();
    n->a = std::move(fun);
    n->b = std::move(arg);
    return Term(std::move(n));
}

Term Term::lam_raw(Term body, std::string display) {
    assert(body.valid());
    auto n = std::make_shared<TermNode>();
    n->kind = TermKind::Lam;
    n->name = std::move(display);
    n->hash = mix(4, body.hash());
    n->size = 1 + body.size();
    n->open_depth = body.open_depth() > 0 ? body.open_depth() - 1 : 0;
    n->has_free = body.has_free();
    n->a = std::move(body);
    return Term(std::move(n));
}

Term Term::cc() {
    static const Term instance = [] {
        auto n = std::make_shared<TermNode>();
        n->kind = TermKind::Cc;
        n->hash = 5;
        return Term(std::move(n));
    }();
    return instance;
}

Term Term::cont(Stack stack) {
    auto n = std::make_shared<TermNode>();
    n->kind = TermKind::Cont;
    n->hash = mix(6, stack.hash());
    n->size = 1 + stack.size();
    n->stack = std::move(stack);
    return Term(std::move(n));
}

Term Term::instr(bool restricted, std::uint32_t index) {
    auto n = std::make_shared<TermNode>();
    n->kind = TermKind::Instr;
    n->restricted = restricted;
    n->index = index;
    n->hash = mix(restricted ? 8 : 7, index);
    return Term(std::move(n));
}

TermKind Term::kind() const { return node_->kind; }
std::uint32_t Term::index() const { return node_->index; }
bool Term::restricted() const { return node_->restricted; }
const std::string& Term::name() const { return node_->name; }
const Term& Term::fun() const { return node_->a; }
const Term& Term::arg() const { return node_->b; }
const Term& Term::body() const { return node_->a; }
const Stack& Term::stack() const { return node_->stack; }
std::size_t Term::hash() const { return node_->hash; }
std::size_t Term::size() const { return node_->size; }
std::uint32_t Term::open_depth() const { return node_->open_depth; }
bool Term::has_free() const { return node_->has_free; }

namespace {

int compare(const Term& a, const Term& b);

int compare(const Stack& a, const Stack& b) {
    Stack x = a, y = b;
    while (true) {
        if (x == y) return 0;
        if (x.is_bottom() != y.is_bottom()) return x.is_bottom() ? -1 : 1;
        if (x.is_bottom()) return x.bottom_index() < y.bottom_index() ? -1 : 1;
        if (int c = compare(x.head(), y.head())) return c;
        x = x.tail();
        y = y.tail();
    }
}

int compare(const Term& a, const Term& b) {
    if (a == b) return 0;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    switch (a.kind()) {
        case TermKind::Bound:
            return a.index() < b.index() ? -1 : 1;
        case TermKind::Free:
            return a.name() < b.name() ? -1 : 1;
        case TermKind::App:
            if (int c = compare(a.fun(), b.fun())) return c;
            return compare(a.arg(), b.arg());
        case TermKind::Lam:
            return compare(a.body(), b.body());
        case TermKind::Cc:
            return 0;
        case TermKind::Cont:
            return compare(a.stack(), b.stack());
        case TermKind::Instr:
            if (a.restricted() != b.restricted()) return a.restricted() ? 1 : -1;
            return a.index() < b.index() ? -1 : 1;
    }
    return 0;
}

}  // namespace

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size()) return false;
    switch (a.kind()) {
        case TermKind::Bound:
            return a.index() == b.index();
        case TermKind::Free:
            return a.name() == b.name();
        case TermKind::App:
            return a.fun() == b.fun() && a.arg() == b.arg();
        case TermKind::Lam:
            return a.body() == b.body();
        case TermKind::Cc:
            return true;
        case TermKind::Cont:
            return a.stack() == b.stack();
        case TermKind::Instr:
            return a.restricted() == b.restricted() && a.index() == b.index();
    }
    return false;
}

bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }

// -- Stack ------------------------------------------------------------------

Stack Stack::bottom(std::uint32_t index) {
    auto n = std::make_shared<StackNode>();
    n->bottom = true;
    n->index = index;
    n->hash = mix(11, index);
    return Stack(std::move(n));
}

Stack Stack::cons(Term head, Stack tail) {
    if (!head.closed()) throw std::invalid_argument("stack elements must be closed terms");
    auto n = std::make_shared<StackNode>();
    n->bottom = false;
    n->index = tail.bottom_index();
    n->hash = mix(mix(12, head.hash()), tail.hash());
    n->size = 1 + head.size() + tail.size();
    n->length = 1 + tail.length();
    n->head = std::move(head);
    n->tail = std::move(tail);
    return Stack(std::move(n));
}

bool Stack::is_bottom() const { return node_->bottom; }
std::uint32_t Stack::bottom_index() const { return node_->index; }
const Term& Stack::head() const { return node_->head; }
const Stack& Stack::tail() const { return node_->tail; }
std::size_t Stack::length() const { return node_->length; }
std::size_t Stack::hash() const { return node_->hash; }
std::size_t Stack::size() const { return node_->size; }

bool operator==(const Stack& a, const Stack& b) {
    const StackNode* x = a.node_.get();
    const StackNode* y = b.node_.get();
    while (true) {
        if (x == y) return true;
        if (!x || !y) return false;
        if (x->hash != y->hash || x->length != y->length || x->bottom != y->bottom) return false;
        if (x->bottom) return x->index == y->index;
        if (!(x->head == y->head)) return false;
        x = x->tail.node_.get();
        y = y->tail.node_.get();
    }
}

bool operator<(const Stack& a, const Stack& b) { return compare(a, b) < 0; }

std::size_t Process::hash() const { return mix(head.hash(), stack.hash()); }

bool operator<(const Process& a, const Process& b) {
    if (int c = compare(a.head, b.head)) return c < 0;
    return compare(a.stack, b.stack) < 0;
}

// -- helpers ----------------------------------------------------------------

Term lam(const std::string& name, const Term& body) {
    return Term::lam_raw(abstract(body, name), name);
}

Term lams(const std::vector<std::string>& names, const Term& body) {
    Term t = body;
    for (auto it = names.rbegin(); it != names.rend(); ++it) t = lam(*it, t);
    return t;
}

Term apps(Term fun, const std::vector<Term>& args) {
    for (const auto& a : args) fun = Term::app(std::move(fun), a);
    return fun;
}

Term operator*(const Term& fun, const Term& arg) { return Term::app(fun, arg); }

Stack push_all(const std::vector<Term>& items, Stack tail) {
    for (auto it = items.rbegin(); it != items.rend(); ++it) tail = Stack::cons(*it, std::move(tail));
    return tail;
}

Stack stack_of(const std::vector<Term>& items, std::uint32_t bottom) {
    return push_all(items, Stack::bottom(bottom));
}

// -- substitution -----------------------------------------------------------

namespace {

template <class Leaf>
Term rebuild(const Term& t, std::uint32_t depth, const Leaf& leaf) {
    switch (t.kind()) {
        case TermKind::Bound:
        case TermKind::Free: {
            auto r = leaf(t, depth);
            return r ? *r : t;
        }
        case TermKind::App: {
            Term f = rebuild(t.fun(), depth, leaf);
            Term a = rebuild(t.arg(), depth, leaf);
            if (f == t.fun() && a == t.arg()) return t;
            return Term::app(std::move(f), std::move(a));
        }
        case TermKind::Lam: {
            Term b = rebuild(t.body(), depth + 1, leaf);
            if (b == t.body()) return t;
            return Term::lam_raw(std::move(b), t.name());
        }
        default:
            return t;
    }
}

}  // namespace

Term substitute(const Term& t, const std::vector<std::pair<std::string, Term>>& bindings) {
    if (!t.has_free() || bindings.empty()) return t;
    return rebuild(t, 0, [&](const Term& v, std::uint32_t) -> std::optional<Term> {
        if (v.kind() != TermKind::Free) return std::nullopt;
        for (const auto& [name, value] : bindings)
            if (name == v.name()) return value;
        return std::nullopt;
    });
}

Term instantiate(const Term& body, const Term& arg) {
    if (body.open_depth() == 0) return body;
    return rebuild(body, 0, [&](const Term& v, std::uint32_t depth) -> std::optional<Term> {
        if (v.kind() != TermKind::Bound || v.index() < depth) return std::nullopt;
        if (v.index() == depth) return arg;
        return Term::bound(v.index() - 1, v.name());
    });
}

Term abstract(const Term& t, const std::string& name) {
    // Shift dangling indices up first so the new binder is the outermost one.
    Term shifted = t.open_depth() == 0
                       ? t
                       : rebuild(t, 0, [](const Term& v, std::uint32_t depth) -> std::optional<Term> {
                             if (v.kind() != TermKind::Bound || v.index() < depth) return std::nullopt;
                             return Term::bound(v.index() + 1, v.name());
                         });
    if (!shifted.has_free()) return shifted;
    return rebuild(shifted, 0, [&](const Term& v, std::uint32_t depth) -> std::optional<Term> {
        if (v.kind() != TermKind::Free || v.name() != name) return std::nullopt;
        return Term::bound(depth, name);
    });
}

std::vector<std::string> free_names(const Term& t) {
    std::set<std::string> out;
    std::function<void(const Term&)> go = [&](const Term& u) {
        if (!u.has_free()) return;
        switch (u.kind()) {
            case TermKind::Free: out.insert(u.name()); break;
            case TermKind::App: go(u.fun()); go(u.arg()); break;
            case TermKind::Lam: go(u.body()); break;
            default: break;
        }
    };
    go(t);
    return {out.begin(), out.end()};
}

bool is_proof_like(const Term& t) {
    switch (t.kind()) {
        case TermKind::Cont: return false;
        case TermKind::Instr: return !t.restricted();
        case TermKind::App: return is_proof_like(t.fun()) && is_proof_like(t.arg());
        case TermKind::Lam: return is_proof_like(t.body());
        default: return true;
    }
}

bool contains_instr(const Term& t, bool restricted, std::uint32_t index) {
    switch (t.kind()) {
        case TermKind::Instr: return t.restricted() == restricted && t.index() == index;
        case TermKind::App:
            return contains_instr(t.fun(), restricted, index) || contains_instr(t.arg(), restricted, index);
        case TermKind::Lam: return contains_instr(t.body(), restricted, index);
        case TermKind::Cont: return contains_instr(t.stack(), restricted, index);
        default: return false;
    }
}

bool contains_instr(const Stack& s, bool restricted, std::uint32_t index) {
    for (Stack cur = s; !cur.is_bottom(); cur = cur.tail())
        if (contains_instr(cur.head(), restricted, index)) return true;
    return false;
}

Term map_instructions(const Term& t, const InstrMap& f) {
    switch (t.kind()) {
        case TermKind::Instr: return f(t);
        case TermKind::App: return Term::app(map_instructions(t.fun(), f), map_instructions(t.arg(), f));
        case TermKind::Lam: return Term::lam_raw(map_instructions(t.body(), f), t.name());
        case TermKind::Cont: return Term::cont(map_instructions(t.stack(), f));
        default: return t;
    }
}

Stack map_instructions(const Stack& s, const InstrMap& f) {
    std::vector<Term> items;
    Stack cur = s;
    for (; !cur.is_bottom(); cur = cur.tail()) items.push_back(map_instructions(cur.head(), f));
    return push_all(items, cur);
}

Process map_instructions(const Process& p, const InstrMap& f) {
    return Process{map_instructions(p.head, f), map_instructions(p.stack, f)};
}

std::vector<Term> instructions_in(const Process& p) {
    std::vector<Term> out;
    InstrMap note = [&](const Term& i) {
        if (std::find(out.begin(), out.end(), i) == out.end()) out.push_back(i);
        return i;
    };
    map_instructions(p, note);
    return out;
}

}  // namespace lcr
