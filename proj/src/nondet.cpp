#include "lcr/nondet.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "lcr/adequacy.hpp"
#include "lcr/machine.hpp"

namespace lcr {

namespace {

FOTerm fv(const std::string& x) { return FOTerm::variable(x); }
FOTerm num(std::uint64_t k) { return FOTerm::numeral(k); }
Formula X() { return Formula::atom("X"); }

std::vector<std::string> xs(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

Formula foralls(const std::vector<std::string>& vars, Formula body) {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = Formula::forall(*it, body);
    return body;
}

Formula b(std::uint64_t k) { return bool_f(num(k)); }

// Disjunction of the given formulas, Bot when empty.
Formula disjs(const std::vector<Formula>& parts) {
    if (parts.empty()) return Formula::bot();
    Formula acc = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) acc = disj(parts[i], acc);
    return acc;
}

void need(const std::string& name, const std::vector<std::uint64_t>& params, std::size_t count, bool positive) {
    if (params.size() != count) throw LogicError(name + ": expects " + std::to_string(count) + " parameter(s)");
    if (positive)
        for (auto p : params)
            if (p == 0) throw LogicError(name + ": parameter must be positive");
}

Term v(const std::string& x) { return var(x); }

}  // namespace

// -- formulas -----------------------------------------------------------------

Formula nondet_f(std::size_t n) {
    if (n == 0) throw LogicError("nondet: n must be positive");
    std::vector<Formula> rows;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Formula> args(n, X());
        args[i] = Formula::top();
        rows.push_back(imps(args, X()));
    }
    return Formula::forall2("X", 0, caps(rows));
}

Formula nondisjoint_f(std::size_t n) {
    if (n == 0) throw LogicError("nondisjoint: n must be positive");
    auto vars = xs(n);
    std::vector<Formula> premises;
    for (const auto& x : vars) premises.push_back(neq(fv(x), num(0)));
    std::vector<FOTerm> meets;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) meets.push_back(FOTerm::apply("&", {fv(vars[i]), fv(vars[j])}));
    FOTerm join = num(0);
    if (!meets.empty()) {
        join = meets[0];
        for (std::size_t i = 1; i < meets.size(); ++i) join = FOTerm::apply("|", {join, meets[i]});
    }
    return foralls(vars, imps(premises, neq(join, num(0))));
}

Formula gim2_models(const Formula& a) { return relativize(2, a); }

Formula gim_lt(std::size_t n) {
    if (n == 0) throw LogicError("gim-lt: n must be positive");
    auto vars = xs(n);
    std::vector<Formula> eqs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) eqs.push_back(eq(fv(vars[i]), fv(vars[j])));
    return gim2_models(foralls(vars, disjs(eqs)));
}

Formula gim_leq(std::size_t n) { return gim_lt(n + 1); }
Formula gim_geq(std::size_t n) { return neg(gim_lt(n)); }
Formula gim_eq(std::size_t n) { return conj(gim_geq(n), gim_lt(n + 1)); }

Formula for_f() {
    return foralls({"x", "y"}, imps({bool_f(fv("x")), bool_f(fv("y"))}, bool_f(FOTerm::apply("|", {fv("x"), fv("y")}))));
}

Formula forl_f() {
    Formula x = bool_f(fv("x"));
    return Formula::cap(Formula::forall("x", imps({b(0), x}, x)), imps({b(1), Formula::top()}, b(1)));
}

Formula forr_f() {
    Formula x = bool_f(fv("x"));
    return Formula::cap(Formula::forall("x", imps({x, b(0)}, x)), imps({Formula::top(), b(1)}, b(1)));
}

Formula forp_f() {
    Formula T = Formula::top();
    return caps({imps({b(1), T}, b(1)), imps({T, b(1)}, b(1)), imps({b(0), b(0)}, b(0))});
}

Formula gustave_f() {
    Formula T = Formula::top();
    return caps({imps({b(0), b(1), T}, b(1)), imps({T, b(0), b(1)}, b(1)), imps({b(1), T, b(0)}, b(1)),
                 imps({b(0), b(0), b(0)}, b(0)), imps({b(1), b(1), b(1)}, b(0))});
}

Formula fork_spec() {
    Formula x = Formula::atom("X"), y = Formula::atom("Y");
    return Formula::forall2("X", 0, Formula::forall2("Y", 0, imps({x, y}, Formula::cap(x, y))));
}

Formula must_spec() {
    Formula x = Formula::atom("X"), y = Formula::atom("Y");
    return Formula::forall2("X", 0, Formula::forall2("Y", 0, imps({x, y}, Formula::cup(x, y))));
}

Formula build_formula(const std::string& name, const std::vector<std::uint64_t>& p) {
    if (name == "nondet") return need(name, p, 1, true), nondet_f(p[0]);
    if (name == "nondisjoint") return need(name, p, 1, true), nondisjoint_f(p[0]);
    if (name == "gim2-nondisjoint") return need(name, p, 1, true), gim2_models(nondisjoint_f(p[0]));
    if (name == "gim") return need(name, p, 2, false), gim(p[0], num(p[1]));
    if (name == "gim-lt") return need(name, p, 1, true), gim_lt(p[0]);
    if (name == "gim-leq") return need(name, p, 1, true), gim_leq(p[0]);
    if (name == "gim-geq") return need(name, p, 1, true), gim_geq(p[0]);
    if (name == "gim-eq") return need(name, p, 1, true), gim_eq(p[0]);
    if (name == "bool") return need(name, p, 1, false), b(p[0]);
    if (name == "nat") return need(name, p, 1, false), nat_f(num(p[0]));
    if (name == "for") return need(name, p, 0, false), for_f();
    if (name == "forl") return need(name, p, 0, false), forl_f();
    if (name == "forr") return need(name, p, 0, false), forr_f();
    if (name == "forp") return need(name, p, 0, false), forp_f();
    if (name == "gustave") return need(name, p, 0, false), gustave_f();
    if (name == "fork") return need(name, p, 0, false), fork_spec();
    if (name == "must") return need(name, p, 0, false), must_spec();
    throw LogicError("unknown formula builder: " + name);
}

std::vector<std::string> formula_names() {
    return {"nondet(n)", "nondisjoint(n)", "gim2-nondisjoint(n)", "gim(n,k)", "gim-lt(n)", "gim-leq(n)",
            "gim-geq(n)", "gim-eq(n)", "bool(k)", "nat(k)", "for", "forl", "forr", "forp", "gustave",
            "fork", "must"};
}

// -- terms --------------------------------------------------------------------

Term true_t() { return lams({"x", "y"}, v("y")); }
Term false_t() { return lams({"x", "y"}, v("x")); }
Term torl_t() { return lams({"x", "y"}, apps(v("x"), {v("y"), true_t()})); }
Term torr_t() { return lams({"x", "y"}, apps(v("y"), {v("x"), true_t()})); }

Term omega_t() {
    Term d = lam("x", v("x") * v("x"));
    return d * d;
}

Term church_t(std::uint64_t k) {
    Term body = v("x");
    for (std::uint64_t i = 0; i < k; ++i) body = v("f") * body;
    return lams({"f", "x"}, body);
}

Term church_succ_t() { return lams({"n", "f", "x"}, apps(v("n"), {v("f"), v("f") * v("x")})); }

Term nondet_to_gim_t() { return lam("t", v("t")); }

Term gim_to_nondet_t(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cc-bridge: n must be positive");
    std::vector<std::string> us;
    std::vector<Term> kus;
    for (std::size_t i = 1; i <= n; ++i) {
        us.push_back("u" + std::to_string(i));
        kus.push_back(v("k") * v(us.back()));
    }
    std::vector<std::string> binders{"t"};
    binders.insert(binders.end(), us.begin(), us.end());
    return lams(binders, Term::cc() * lam("k", apps(v("t"), kus)));
}

Term por_l_t() {
    return lams({"t", "u1", "u2", "u3"}, apps(v("t"), {v("u1"), v("u2"), v("u1"), v("u3")}));
}

Term por_r_t() {
    return lams({"t", "u", "v"}, apps(v("t"), {apps(torl_t(), {v("u"), v("v")}), apps(torr_t(), {v("u"), v("v")}),
                                              true_t()}));
}

Term y_psi_t(const std::string& psi) {
    Term x = lam("y", apps(v(psi), {church_t(0), church_succ_t() * v("y")}));
    return y_of(x);
}

Term nat_l_t() { return lam("psi", y_psi_t("psi")); }
Term nat_r_t() { return lams({"t", "u", "v"}, apps(v("t"), {lam("z", v("u")), v("v")})); }

Term build_term(const std::string& name, const std::vector<std::uint64_t>& p) {
    auto arity = [&](std::size_t k) {
        if (p.size() != k) throw std::invalid_argument(name + ": expects " + std::to_string(k) + " parameter(s)");
    };
    if (name == "true") return arity(0), true_t();
    if (name == "false") return arity(0), false_t();
    if (name == "torl") return arity(0), torl_t();
    if (name == "torr") return arity(0), torr_t();
    if (name == "omega") return arity(0), omega_t();
    if (name == "church") return arity(1), church_t(p[0]);
    if (name == "succ") return arity(0), church_succ_t();
    if (name == "id-bridge") return arity(0), nondet_to_gim_t();
    if (name == "cc-bridge") return arity(1), gim_to_nondet_t(p[0]);
    if (name == "por-l") return arity(0), por_l_t();
    if (name == "por-r") return arity(0), por_r_t();
    if (name == "nat-l") return arity(0), nat_l_t();
    if (name == "nat-r") return arity(0), nat_r_t();
    throw std::invalid_argument("unknown term builder: " + name);
}

std::vector<std::string> term_names() {
    return {"true", "false", "torl", "torr", "omega", "church(k)", "succ", "id-bridge", "cc-bridge(n)",
            "por-l", "por-r", "nat-l", "nat-r"};
}

// -- behaviour checks ---------------------------------------------------------

std::vector<Term> default_term_probes(const Term& bot, const Term& top) {
    return {true_t(), false_t(), bot, top, omega_t(), church_t(0), church_t(1), church_t(2)};
}

std::vector<Stack> default_stack_probes(const std::vector<Term>& items) {
    std::vector<Stack> out{Stack::bottom(0)};
    for (const auto& t : items) out.push_back(Stack::cons(t, Stack::bottom(0)));
    return out;
}

std::vector<VotingSample> random_voting_samples(std::size_t n, const std::vector<Term>& terms,
                                                const std::vector<Stack>& stacks, std::size_t count,
                                                std::mt19937_64& rng) {
    std::vector<VotingSample> out;
    if (n == 0 || terms.empty() || stacks.empty()) return out;
    for (std::size_t c = 0; c < count; ++c) {
        VotingSample s;
        for (std::size_t i = 0; i < n; ++i) s.args.push_back(terms[rng() % terms.size()]);
        s.pi = stacks[rng() % stacks.size()];
        s.j = rng() % n;
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<VotingSample> agreeing_voting_samples(std::size_t n, const std::vector<Term>& agree,
                                                  const std::vector<Term>& terms, const std::vector<Stack>& stacks,
                                                  std::size_t count, std::mt19937_64& rng) {
    auto out = random_voting_samples(n, agree, stacks, count, rng);
    if (terms.empty()) return out;
    for (auto& s : out) s.args[s.j] = terms[rng() % terms.size()];
    return out;
}

namespace {

Instance voting_instance(const Term& phi, const std::vector<Term>& args, const Stack& pi,
                         const std::vector<std::size_t>& excluded) {
    Instance inst;
    inst.conclusion = phi * push_all(args, pi);
    std::string label = "excluded";
    for (std::size_t j : excluded) label += " " + std::to_string(j);
    inst.label = label;
    for (std::size_t i = 0; i < args.size(); ++i)
        if (std::find(excluded.begin(), excluded.end(), i) == excluded.end()) {
            Process p = args[i] * pi;
            if (std::find(inst.premises.begin(), inst.premises.end(), p) == inst.premises.end())
                inst.premises.push_back(p);
        }
    return inst;
}

void subsets_of_size(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
                     std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < n; ++i) {
        cur.push_back(i);
        subsets_of_size(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// Branch of a boolean formula: one entry per argument (-1 for Top), and the result.
struct Branch {
    std::vector<int> args;
    int result;
    std::string label;
};

std::vector<Branch> branches_of(Behavior kind) {
    if (kind == Behavior::ParallelOr)
        return {{{1, -1}, 1, "(1, T) -> 1"}, {{-1, 1}, 1, "(T, 1) -> 1"}, {{0, 0}, 0, "(0, 0) -> 0"}};
    return {{{0, 1, -1}, 1, "(0, 1, T) -> 1"},
            {{-1, 0, 1}, 1, "(T, 0, 1) -> 1"},
            {{1, -1, 0}, 1, "(1, T, 0) -> 1"},
            {{0, 0, 0}, 0, "(0, 0, 0) -> 0"},
            {{1, 1, 1}, 0, "(1, 1, 1) -> 0"}};
}

}  // namespace

CheckReport check_voting(const Term& phi, std::size_t n, const RuleSet& rules, const std::vector<VotingSample>& samples,
                         const CheckOptions& opts) {
    CheckReport rep;
    rep.kind = std::to_string(n) + "-voting";
    rep.candidate = print(phi);
    rep.options = opts;
    PoleSearch search(rules);
    for (const auto& s : samples) {
        if (s.args.size() != n || s.j >= n) throw std::invalid_argument("voting sample does not match the arity");
        rep.results.push_back(check_instance(voting_instance(phi, s.args, s.pi, {s.j}), search, opts));
    }
    return rep;
}

const char* to_string(Behavior b) {
    switch (b) {
        case Behavior::Fork: return "fork";
        case Behavior::Must: return "must";
        case Behavior::ParallelOr: return "parallel-or";
        case Behavior::Gustave: return "gustave";
        case Behavior::Voting: return "voting";
    }
    return "?";
}

Behavior parse_behavior(const std::string& s) {
    for (Behavior b : {Behavior::Fork, Behavior::Must, Behavior::ParallelOr, Behavior::Gustave, Behavior::Voting})
        if (s == to_string(b)) return b;
    throw std::invalid_argument("unknown behaviour: " + s);
}

std::optional<int> boolean_behaviour(const Term& u, std::size_t fuel) {
    // Instructions no candidate is expected to mention and no rule fires on.
    Term x = restricted(0xfffff0), y = restricted(0xfffff1);
    Stack e = Stack::bottom(0xfffff);
    Trace t = run_quiet(u * push_all({x, y}, e), fuel);
    if (t.status != RunStatus::Stuck || t.final.stack != e) return std::nullopt;
    if (t.final.head == x) return 0;
    if (t.final.head == y) return 1;
    return std::nullopt;
}

std::vector<Instance> behavior_instances(const BehaviorSpec& spec, const Term& c, const BehaviorSample& s) {
    std::vector<Instance> out;
    switch (spec.kind) {
        case Behavior::Fork:
        case Behavior::Must: {
            if (s.args.size() != 2) throw std::invalid_argument("fork/must samples take two arguments");
            Process concl = c * push_all(s.args, s.pi);
            if (spec.kind == Behavior::Fork) {
                out.push_back({"left", {s.args[0] * s.pi}, concl});
                out.push_back({"right", {s.args[1] * s.pi}, concl});
            } else {
                out.push_back({"both", {s.args[0] * s.pi, s.args[1] * s.pi}, concl});
            }
            break;
        }
        case Behavior::Voting: {
            if (s.args.size() != spec.n || spec.k == 0 || spec.k > spec.n)
                throw std::invalid_argument("voting sample does not match (n, k)");
            std::vector<std::vector<std::size_t>> js;
            if (!s.excluded.empty()) {
                js.push_back(s.excluded);
            } else {
                std::vector<std::size_t> cur;
                subsets_of_size(spec.n, spec.k, 0, cur, js);
            }
            for (const auto& J : js) out.push_back(voting_instance(c, s.args, s.pi, J));
            break;
        }
        case Behavior::ParallelOr:
        case Behavior::Gustave: {
            auto branches = branches_of(spec.kind);
            std::size_t arity = branches[0].args.size();
            if (s.args.size() != arity) throw std::invalid_argument("boolean sample has the wrong arity");
            if (s.pi.is_bottom() || s.pi.tail().is_bottom())
                throw std::invalid_argument("boolean samples need a stack a . b . rho");
            Term a = s.pi.head(), bb = s.pi.tail().head();
            const Stack& rho = s.pi.tail().tail();
            std::vector<std::optional<int>> beh;
            for (const auto& u : s.args) beh.push_back(boolean_behaviour(u));
            for (const auto& br : branches) {
                bool applies = true;
                for (std::size_t i = 0; i < arity; ++i)
                    if (br.args[i] >= 0 && beh[i] != br.args[i]) applies = false;
                if (!applies) continue;
                // pi is in the falsity of bool(1) when b * rho is in, of bool(0) when a * rho is in
                Process premise = (br.result == 1 ? bb : a) * rho;
                out.push_back({br.label, {premise}, c * push_all(s.args, s.pi)});
            }
            break;
        }
    }
    return out;
}

CheckReport check_behavior(const BehaviorSpec& spec, const Term& candidate, const RuleSet& rules,
                           const std::vector<BehaviorSample>& samples, const CheckOptions& opts) {
    CheckReport rep;
    rep.kind = to_string(spec.kind);
    if (spec.kind == Behavior::Voting) rep.kind = "(" + std::to_string(spec.n) + "," + std::to_string(spec.k) + ")-voting";
    rep.candidate = print(candidate);
    rep.options = opts;
    PoleSearch search(rules);
    for (const auto& s : samples)
        for (const auto& inst : behavior_instances(spec, candidate, s))
            rep.results.push_back(check_instance(inst, search, opts));
    return rep;
}

std::vector<BehaviorSample> boolean_samples(std::size_t arity, const std::vector<Term>& fillers,
                                            const std::vector<Term>& probes, const std::vector<Stack>& rhos) {
    std::vector<BehaviorSample> out;
    if (fillers.empty()) return out;
    std::vector<std::size_t> idx(arity, 0);
    while (true) {
        std::vector<Term> args;
        for (auto i : idx) args.push_back(fillers[i]);
        for (const auto& a : probes)
            for (const auto& bb : probes)
                for (const auto& rho : rhos) out.push_back({args, push_all({a, bb}, rho), {}});
        std::size_t pos = 0;
        while (pos < arity && ++idx[pos] == fillers.size()) idx[pos++] = 0;
        if (pos == arity) break;
    }
    return out;
}

// -- finite worlds ------------------------------------------------------------

VotingEquivalence voting_equivalence(const FiniteModel& m, const Term& phi, std::size_t n) {
    VotingEquivalence r;
    Formula f = nondet_f(n);
    r.realizes = true;
    for (std::size_t p = 0; p < m.poles().size() && r.realizes; ++p) r.realizes = m.realizes(phi, f, p);

    r.voting = true;
    const auto& terms = m.terms();
    std::vector<std::size_t> idx(n, 0);
    while (r.voting && !terms.empty()) {
        std::vector<Term> args;
        for (auto i : idx) args.push_back(terms[i]);
        for (const auto& pi : m.stacks()) {
            Process concl = phi * push_all(args, pi);
            for (std::size_t p = 0; p < m.poles().size() && r.voting; ++p) {
                if (m.in_pole(concl, p)) continue;
                for (std::size_t j = 0; j < n && r.voting; ++j) {
                    bool all_in = true;
                    for (std::size_t i = 0; i < n && all_in; ++i)
                        if (i != j) all_in = m.in_pole(args[i] * pi, p);
                    if (all_in) r.voting = false;
                }
            }
        }
        std::size_t pos = 0;
        while (pos < n && ++idx[pos] == terms.size()) idx[pos++] = 0;
        if (pos == n) break;
    }
    return r;
}

}  // namespace lcr
