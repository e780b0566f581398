#include "lcr/adequacy.hpp"

#include <algorithm>
#include <set>

namespace lcr {

const char* to_string(DerivRule r) {
    switch (r) {
        case DerivRule::Axiom: return "Axiom";
        case DerivRule::Peirce: return "Peirce";
        case DerivRule::TopIntro: return "TopIntro";
        case DerivRule::BotElim: return "BotElim";
        case DerivRule::ImpIntro: return "ImpIntro";
        case DerivRule::ImpElim: return "ImpElim";
        case DerivRule::All1Intro: return "All1Intro";
        case DerivRule::All1Elim: return "All1Elim";
        case DerivRule::All2Intro: return "All2Intro";
        case DerivRule::All2Elim: return "All2Elim";
    }
    return "?";
}

std::optional<DerivRule> parse_deriv_rule(const std::string& s) {
    for (int i = 0; i <= static_cast<int>(DerivRule::All2Elim); ++i) {
        auto r = static_cast<DerivRule>(i);
        if (s == to_string(r)) return r;
    }
    return std::nullopt;
}

std::string to_string(const Rejection& r) {
    std::string path = "root";
    for (auto i : r.path) path += "." + std::to_string(i);
    return path + " (" + to_string(r.rule) + "): " + r.reason;
}

namespace {

const Formula* lookup(const Context& ctx, const std::string& x) {
    for (auto it = ctx.rbegin(); it != ctx.rend(); ++it)
        if (it->var == x) return &it->type;
    return nullptr;
}

bool same_context(const Context& a, const Context& b) {
    if (a.size() != b.size()) return false;
    for (const auto& h : a) {
        const Formula* f = lookup(b, h.var);
        if (!f || !alpha_equal(*f, h.type)) return false;
    }
    return true;
}

bool fo_free_in_context(const Context& ctx, const std::string& x) {
    for (const auto& h : ctx) {
        auto fv = free_fo_vars(h.type);
        if (std::find(fv.begin(), fv.end(), x) != fv.end()) return true;
    }
    return false;
}

bool pred_free_in(const Formula& f, const std::string& X) {
    for (const auto& [name, arity] : free_pred_vars(f))
        if (name == X) return true;
    return false;
}

bool pred_free_in_context(const Context& ctx, const std::string& X) {
    for (const auto& h : ctx)
        if (pred_free_in(h.type, X)) return true;
    return false;
}

struct Checker {
    std::vector<std::size_t> path;
    std::optional<Rejection> failure;

    bool reject(const Derivation& d, std::string why) {
        failure = Rejection{path, d.rule, std::move(why)};
        return false;
    }

    bool premise_count(const Derivation& d, std::size_t n) {
        if (d.premises.size() == n) return true;
        return reject(d, "expects " + std::to_string(n) + " premise(s), got " + std::to_string(d.premises.size()));
    }

    bool same_ctx_term(const Derivation& d, const Derivation& p) {
        if (!same_context(d.ctx, p.ctx)) return reject(d, "premise context differs");
        if (p.term != d.term) return reject(d, "premise term differs");
        return true;
    }

    bool node(const Derivation& d) {
        if (!d.term.valid() || !d.formula.valid()) return reject(d, "missing term or formula");
        std::set<std::string> seen;
        for (const auto& h : d.ctx) {
            if (!seen.insert(h.var).second) return reject(d, "variable " + h.var + " declared twice in the context");
            if (!h.type.valid()) return reject(d, "hypothesis " + h.var + " has no formula");
        }
        for (const auto& x : free_names(d.term))
            if (!seen.count(x)) return reject(d, "free variable " + x + " not in the context");
        try {
            check_formula(d.formula);
            for (const auto& h : d.ctx) check_formula(h.type);
        } catch (const LogicError& e) {
            return reject(d, e.what());
        }

        const Formula& A = d.formula;
        switch (d.rule) {
            case DerivRule::Axiom: {
                if (!premise_count(d, 0)) return false;
                if (d.term.kind() != TermKind::Free) return reject(d, "term is not a variable");
                const Formula* f = lookup(d.ctx, d.term.name());
                if (!f || !alpha_equal(*f, A)) return reject(d, "context does not give " + d.term.name() + " this formula");
                return true;
            }
            case DerivRule::Peirce: {
                if (!premise_count(d, 0)) return false;
                if (d.term != Term::cc()) return reject(d, "term is not cc");
                bool shape = A.kind() == FormulaKind::Imp && A.left().kind() == FormulaKind::Imp &&
                             A.left().left().kind() == FormulaKind::Imp && alpha_equal(A.left().right(), A.right()) &&
                             alpha_equal(A.left().left().left(), A.right());
                if (!shape) return reject(d, "formula is not ((A -> B) -> A) -> A");
                return true;
            }
            case DerivRule::TopIntro:
                if (!premise_count(d, 0)) return false;
                if (A.kind() != FormulaKind::Top) return reject(d, "formula is not Top");
                return true;
            case DerivRule::BotElim: {
                if (!premise_count(d, 1)) return false;
                const Derivation& p = d.premises[0];
                if (!same_ctx_term(d, p)) return false;
                if (p.formula.kind() != FormulaKind::Bot) return reject(d, "premise does not prove Bot");
                return true;
            }
            case DerivRule::ImpIntro: {
                if (!premise_count(d, 1)) return false;
                const Derivation& p = d.premises[0];
                if (A.kind() != FormulaKind::Imp) return reject(d, "formula is not an implication");
                if (d.term.kind() != TermKind::Lam) return reject(d, "term is not an abstraction");
                if (p.ctx.size() != d.ctx.size() + 1) return reject(d, "premise must extend the context by one hypothesis");
                const Hyp& h = p.ctx.back();
                if (lookup(d.ctx, h.var)) return reject(d, "discharged variable " + h.var + " already in the context");
                Context rest(p.ctx.begin(), p.ctx.end() - 1);
                if (!same_context(d.ctx, rest)) return reject(d, "premise context differs");
                if (!alpha_equal(h.type, A.left())) return reject(d, "discharged hypothesis does not match the premise of A -> B");
                if (p.term != instantiate(d.term.body(), var(h.var))) return reject(d, "premise term is not the abstraction body");
                if (!alpha_equal(p.formula, A.right())) return reject(d, "premise formula is not the conclusion of A -> B");
                return true;
            }
            case DerivRule::ImpElim: {
                if (!premise_count(d, 2)) return false;
                const Derivation& f = d.premises[0];
                const Derivation& a = d.premises[1];
                if (d.term.kind() != TermKind::App) return reject(d, "term is not an application");
                if (!same_context(d.ctx, f.ctx) || !same_context(d.ctx, a.ctx)) return reject(d, "premise context differs");
                if (f.term != d.term.fun() || a.term != d.term.arg()) return reject(d, "premise terms do not match t u");
                if (f.formula.kind() != FormulaKind::Imp) return reject(d, "first premise is not an implication");
                if (!alpha_equal(f.formula.left(), a.formula)) return reject(d, "argument formula does not match");
                if (!alpha_equal(f.formula.right(), A)) return reject(d, "conclusion does not match");
                return true;
            }
            case DerivRule::All1Intro: {
                if (!premise_count(d, 1)) return false;
                const Derivation& p = d.premises[0];
                if (!same_ctx_term(d, p)) return false;
                if (A.kind() != FormulaKind::Forall1) return reject(d, "formula is not forall x");
                std::string y = d.eigen.value_or(A.name());
                if (fo_free_in_context(d.ctx, y)) return reject(d, "freshness: " + y + " is free in the context");
                if (y != A.name()) {
                    auto fv = free_fo_vars(A);
                    if (std::find(fv.begin(), fv.end(), y) != fv.end())
                        return reject(d, "freshness: " + y + " is free in the conclusion");
                }
                if (!alpha_equal(p.formula, subst_fo(A.body(), A.name(), FOTerm::variable(y))))
                    return reject(d, "premise formula is not the body at the eigenvariable");
                return true;
            }
            case DerivRule::All1Elim: {
                if (!premise_count(d, 1)) return false;
                const Derivation& p = d.premises[0];
                if (!same_ctx_term(d, p)) return false;
                if (p.formula.kind() != FormulaKind::Forall1) return reject(d, "premise is not forall x");
                if (!d.witness) return reject(d, "missing witness");
                try {
                    check_symbols(*d.witness);
                } catch (const LogicError& e) {
                    return reject(d, e.what());
                }
                if (!alpha_equal(A, subst_fo(p.formula.body(), p.formula.name(), *d.witness)))
                    return reject(d, "conclusion is not the instance at the witness");
                return true;
            }
            case DerivRule::All2Intro: {
                if (!premise_count(d, 1)) return false;
                const Derivation& p = d.premises[0];
                if (!same_ctx_term(d, p)) return false;
                if (A.kind() != FormulaKind::Forall2) return reject(d, "formula is not forall X");
                std::string Y = d.eigen.value_or(A.name());
                if (pred_free_in_context(d.ctx, Y)) return reject(d, "freshness: " + Y + " is free in the context");
                Formula expected = A.body();
                if (Y != A.name()) {
                    if (pred_free_in(A, Y)) return reject(d, "freshness: " + Y + " is free in the conclusion");
                    std::vector<std::string> ys;
                    std::vector<FOTerm> args;
                    for (std::size_t i = 0; i < A.arity(); ++i) {
                        ys.push_back("_y" + std::to_string(i));
                        args.push_back(FOTerm::variable(ys.back()));
                    }
                    expected = subst_pred(A.body(), A.name(), ys, Formula::atom(Y, args));
                }
                if (!alpha_equal(p.formula, expected)) return reject(d, "premise formula is not the body at the eigenvariable");
                return true;
            }
            case DerivRule::All2Elim: {
                if (!premise_count(d, 1)) return false;
                const Derivation& p = d.premises[0];
                if (!same_ctx_term(d, p)) return false;
                if (p.formula.kind() != FormulaKind::Forall2) return reject(d, "premise is not forall X");
                if (!d.pred) return reject(d, "missing predicate");
                if (d.params.size() != p.formula.arity()) return reject(d, "parameter count differs from the arity");
                std::set<std::string> distinct(d.params.begin(), d.params.end());
                if (distinct.size() != d.params.size()) return reject(d, "parameters must be distinct");
                Formula inst;
                try {
                    inst = subst_pred(p.formula.body(), p.formula.name(), d.params, *d.pred);
                } catch (const LogicError& e) {
                    return reject(d, e.what());
                }
                if (!alpha_equal(A, inst)) return reject(d, "conclusion is not the instance at the predicate");
                return true;
            }
        }
        return reject(d, "unknown rule");
    }

    bool walk(const Derivation& d) {
        if (!node(d)) return false;
        for (std::size_t i = 0; i < d.premises.size(); ++i) {
            path.push_back(i);
            if (!walk(d.premises[i])) return false;
            path.pop_back();
        }
        return true;
    }
};

Derivation leaf(DerivRule r, Context ctx, Term t, Formula f) {
    Derivation d;
    d.rule = r;
    d.ctx = std::move(ctx);
    d.term = std::move(t);
    d.formula = std::move(f);
    return d;
}

Derivation unary(DerivRule r, Derivation p, Term t, Formula f) {
    Derivation d = leaf(r, p.ctx, std::move(t), std::move(f));
    d.premises.push_back(std::move(p));
    return d;
}

}  // namespace

std::optional<Rejection> check_derivation(const Derivation& d) {
    Checker c;
    c.walk(d);
    return c.failure;
}

Term extract_realizer(const Derivation& d, const std::map<std::string, Term>& hyp_realizers) {
    std::vector<std::pair<std::string, Term>> bindings;
    for (const auto& h : d.ctx) {
        auto it = hyp_realizers.find(h.var);
        if (it == hyp_realizers.end()) throw AdequacyError("no realizer given for hypothesis " + h.var);
        bindings.emplace_back(h.var, it->second);
    }
    return substitute(d.term, bindings);
}

Derivation axiom(Context ctx, const std::string& x) {
    const Formula* f = lookup(ctx, x);
    if (!f) throw AdequacyError("axiom: " + x + " not in the context");
    Formula a = *f;
    return leaf(DerivRule::Axiom, std::move(ctx), var(x), a);
}

Derivation peirce(Context ctx, Formula a, Formula b) {
    return leaf(DerivRule::Peirce, std::move(ctx), Term::cc(), Formula::imp(Formula::imp(Formula::imp(a, b), a), a));
}

Derivation top_intro(Context ctx, Term t) { return leaf(DerivRule::TopIntro, std::move(ctx), std::move(t), Formula::top()); }

Derivation bot_elim(Derivation d, Formula a) {
    Term t = d.term;
    return unary(DerivRule::BotElim, std::move(d), t, std::move(a));
}

Derivation imp_intro(Derivation d) {
    if (d.ctx.empty()) throw AdequacyError("imp_intro: nothing to discharge");
    Hyp h = d.ctx.back();
    Context ctx(d.ctx.begin(), d.ctx.end() - 1);
    Derivation out = leaf(DerivRule::ImpIntro, ctx, lam(h.var, d.term), Formula::imp(h.type, d.formula));
    out.premises.push_back(std::move(d));
    return out;
}

Derivation imp_elim(Derivation f, Derivation a) {
    if (f.formula.kind() != FormulaKind::Imp) throw AdequacyError("imp_elim: not an implication");
    Derivation out = leaf(DerivRule::ImpElim, f.ctx, f.term * a.term, f.formula.right());
    out.premises.push_back(std::move(f));
    out.premises.push_back(std::move(a));
    return out;
}

Derivation all1_intro(Derivation d, const std::string& x) {
    Term t = d.term;
    Formula f = Formula::forall(x, d.formula);
    return unary(DerivRule::All1Intro, std::move(d), t, f);
}

Derivation all1_elim(Derivation d, FOTerm witness) {
    if (d.formula.kind() != FormulaKind::Forall1) throw AdequacyError("all1_elim: not forall x");
    Term t = d.term;
    Formula f = subst_fo(d.formula.body(), d.formula.name(), witness);
    Derivation out = unary(DerivRule::All1Elim, std::move(d), t, f);
    out.witness = std::move(witness);
    return out;
}

Derivation all2_intro(Derivation d, const std::string& pred, std::size_t arity) {
    Term t = d.term;
    Formula f = Formula::forall2(pred, arity, d.formula);
    return unary(DerivRule::All2Intro, std::move(d), t, f);
}

Derivation all2_elim(Derivation d, std::vector<std::string> params, Formula b) {
    if (d.formula.kind() != FormulaKind::Forall2) throw AdequacyError("all2_elim: not forall X");
    Term t = d.term;
    Formula f = subst_pred(d.formula.body(), d.formula.name(), params, b);
    Derivation out = unary(DerivRule::All2Elim, std::move(d), t, f);
    out.params = std::move(params);
    out.pred = std::move(b);
    return out;
}

// -- Horn clauses ---------------------------------------------------------------

Formula HornClause::formula() const {
    std::vector<Formula> es;
    for (const auto& e : premises) es.push_back(eq(e.lhs, e.rhs));
    Formula body = imps(es, goal ? eq(goal->lhs, goal->rhs) : Formula::bot());
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = Formula::forall(*it, body);
    return body;
}

void HornClause::validate(const FunctionRegistry& reg) const {
    std::set<std::string> declared(vars.begin(), vars.end());
    if (declared.size() != vars.size()) throw LogicError("horn clause: repeated variable");
    auto check = [&](const FOTerm& a) {
        check_symbols(a, reg);
        std::vector<std::string> used;
        fo_vars(a, used);
        for (const auto& x : used)
            if (!declared.count(x)) throw LogicError("horn clause: undeclared variable " + x);
    };
    for (const auto& e : premises) check(e.lhs), check(e.rhs);
    if (goal) check(goal->lhs), check(goal->rhs);
}

namespace {

bool falsified_at(const HornClause& h, const std::vector<std::uint64_t>& values) {
    std::map<std::string, std::uint64_t> env;
    for (std::size_t i = 0; i < h.vars.size(); ++i) env[h.vars[i]] = values[i];
    for (const auto& e : h.premises)
        if (fo_value(e.lhs, env) != fo_value(e.rhs, env)) return false;
    return !h.goal || fo_value(h.goal->lhs, env) != fo_value(h.goal->rhs, env);
}

}  // namespace

std::optional<std::vector<std::uint64_t>> horn_counterexample(const HornClause& h, std::uint64_t bound) {
    h.validate();
    if (bound == 0) return std::nullopt;
    std::vector<std::uint64_t> values(h.vars.size(), 0);
    while (true) {
        if (falsified_at(h, values)) return values;
        std::size_t pos = 0;
        while (pos < values.size() && ++values[pos] == bound) values[pos++] = 0;
        if (pos == values.size()) return std::nullopt;
    }
}

Term horn_realizer(const HornClause& h, const HornTruth& truth) {
    h.validate();
    Term I = lam("y", var("y"));
    if (!truth.holds) {
        if (truth.witness.size() != h.vars.size()) throw AdequacyError("witness has the wrong length");
        if (!falsified_at(h, truth.witness)) throw AdequacyError("witness does not falsify the clause");
        return lam("f", apps(var("f"), std::vector<Term>(h.premises.size(), I)));
    }
    if (!h.definite() && h.premises.empty()) throw AdequacyError("a goal clause without premises is false");
    std::vector<std::string> ts;
    for (std::size_t i = 1; i <= h.premises.size(); ++i) ts.push_back("t" + std::to_string(i));
    Term inner = h.definite() ? var("y") : I;
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) inner = var(*it) * inner;
    if (h.definite()) inner = lam("y", inner);
    return ts.empty() ? inner : lams(ts, inner);
}

Formula horn_realized_formula(const HornClause& h, const HornTruth& truth) {
    Formula H = h.formula();
    if (truth.holds) return H;
    return h.definite() ? imps({H, Formula::top()}, Formula::bot()) : Formula::imp(H, Formula::bot());
}

// -- natural numbers ------------------------------------------------------------

Term y_of(const Term& t) {
    // built on indices so that free names of t cannot be captured
    Term delta = Term::lam_raw(t * (Term::bound(0) * Term::bound(0)), "d");
    return delta * delta;
}

std::variant<Term, Formula> build_nat(const std::string& name, const std::vector<std::uint64_t>& params) {
    auto need = [&](std::size_t k) {
        if (params.size() != k) throw AdequacyError(name + ": expects " + std::to_string(k) + " parameter(s)");
    };
    if (name == "nat-formula") return need(1), nat_f(FOTerm::numeral(params[0]));
    Term f = var("f"), x = var("x");
    if (name == "church") {
        need(1);
        Term body = x;
        for (std::uint64_t i = 0; i < params[0]; ++i) body = f * body;
        return lams({"f", "x"}, body);
    }
    if (name == "church-succ") return need(0), lams({"n", "f", "x"}, apps(var("n"), {f, f * x}));
    throw AdequacyError("unknown nat builder: " + name);
}

}  // namespace lcr
