#include "lcr/corpus.hpp"

#include <functional>

namespace lcr {

namespace {

Formula F(const char* s) { return parse_formula(s); }

GoldenDerivation identity() {
    Derivation d = axiom({{"x", F("X")}}, "x");
    return {"identity", all2_intro(imp_intro(d), "X", 0), {}};
}

GoldenDerivation k_combinator() {
    Derivation d = axiom({{"x", F("X")}, {"y", F("Y")}}, "x");
    d = imp_intro(imp_intro(d));
    return {"k-combinator", all2_intro(all2_intro(d, "Y", 0), "X", 0), {}};
}

GoldenDerivation peirce_law() {
    return {"peirce", all2_intro(all2_intro(peirce({}, F("X"), F("Y")), "Y", 0), "X", 0), {}};
}

GoldenDerivation top_intro_case() {
    Derivation d = top_intro({{"x", F("Top")}}, var("x"));
    return {"top-intro", imp_intro(d), {}};
}

GoldenDerivation ex_falso() {
    Derivation d = bot_elim(axiom({{"x", F("Bot")}}, "x"), F("X"));
    return {"ex-falso", imp_intro(all2_intro(d, "X", 0)), {}};
}

GoldenDerivation modus_ponens() {
    Context ctx{{"f", F("X -> Y")}, {"a", F("X")}};
    Derivation d = imp_elim(axiom(ctx, "f"), axiom(ctx, "a"));
    d = imp_intro(imp_intro(d));
    return {"modus-ponens", all2_intro(all2_intro(d, "Y", 0), "X", 0), {}};
}

GoldenDerivation instance_at_zero() {
    Derivation d = all1_elim(axiom({{"h", F("forall y. Z(y)")}}, "h"), FOTerm::numeral(0));
    return {"instance-at-zero", all2_intro(imp_intro(d), "Z", 1), {}};
}

GoldenDerivation all_false() {
    Derivation d = all2_elim(axiom({{"h", F("forall2 X. X")}}, "h"), {}, F("Bot"));
    return {"all-false", imp_intro(d), {}};
}

GoldenDerivation leibniz_transitivity() {
    FOTerm x = FOTerm::variable("x"), y = FOTerm::variable("y"), z = FOTerm::variable("z");
    Context ctx{{"e", eq(x, y)}, {"f", eq(y, z)}, {"t", F("Z(x)")}};
    FOTerm w = FOTerm::variable("w");
    Derivation e = all2_elim(axiom(ctx, "e"), {"w"}, Formula::atom("Z", {w}));
    Derivation f = all2_elim(axiom(ctx, "f"), {"w"}, Formula::atom("Z", {w}));
    Derivation d = all2_intro(imp_intro(imp_elim(f, imp_elim(e, axiom(ctx, "t")))), "Z", 1);
    d = imp_intro(imp_intro(d));
    return {"leibniz-transitivity", all1_intro(all1_intro(all1_intro(d, "z"), "y"), "x"), {}};
}

GoldenDerivation church_zero() {
    Context ctx{{"f", F("forall y. Z(y) -> Z(s(y))")}, {"x", F("Z(0)")}};
    Derivation d = imp_intro(imp_intro(axiom(ctx, "x")));
    return {"church-zero", all2_intro(d, "Z", 1), {}};
}

GoldenDerivation church_succ() {
    FOTerm x = FOTerm::variable("x");
    Context ctx{{"n", nat_f(x)}, {"f", F("forall y. Z(y) -> Z(s(y))")}, {"a", F("Z(0)")}};
    // f at s(y), generalized: forall y. Z(s(y)) -> Z(s(s(y)))
    Derivation shifted = all1_intro(all1_elim(axiom(ctx, "f"), parse_fo_term("s(y)")), "y");
    Derivation first = imp_elim(all1_elim(axiom(ctx, "f"), FOTerm::numeral(0)), axiom(ctx, "a"));
    Derivation n_at = all2_elim(axiom(ctx, "n"), {"w"}, F("Z(s(w))"));
    Derivation d = imp_elim(imp_elim(n_at, shifted), first);
    d = all2_intro(imp_intro(imp_intro(d)), "Z", 1);
    return {"church-succ", all1_intro(imp_intro(d), "x"), {}};
}

GoldenDerivation double_negation() {
    Context ctx{{"f", F("(X -> Bot) -> Bot")}, {"k", F("X -> Bot")}};
    Derivation body = bot_elim(imp_elim(axiom(ctx, "f"), axiom(ctx, "k")), F("X"));
    Derivation lam_k = imp_intro(body);
    Context outer{{"f", F("(X -> Bot) -> Bot")}};
    Derivation d = imp_elim(peirce(outer, F("X"), F("Bot")), lam_k);
    return {"double-negation", all2_intro(imp_intro(d), "X", 0), {}};
}

GoldenDerivation open_hypothesis() {
    // a realizer of Bot specializes to anything
    Derivation d = all2_intro(bot_elim(axiom({{"b", F("Bot")}}, "b"), F("X")), "X", 0);
    return {"open-hypothesis", d, {{"b", restricted(1)}}};
}

void collect(Derivation& d, std::vector<Derivation*>& out) {
    out.push_back(&d);
    for (auto& p : d.premises) collect(p, out);
}

}  // namespace

std::vector<GoldenDerivation> golden_derivations() {
    return {identity(),      k_combinator(),     peirce_law(),       top_intro_case(), ex_falso(),
            modus_ponens(),  instance_at_zero(), all_false(),        leibniz_transitivity(), church_zero(),
            church_succ(),   double_negation(),  open_hypothesis()};
}

std::vector<Derivation> payload_mutations(const Derivation& d) {
    std::vector<Derivation> out;
    std::vector<Derivation*> nodes;
    Derivation copy = d;
    collect(copy, nodes);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto mutate = [&](const std::function<void(Derivation&)>& f) {
            Derivation m = d;
            std::vector<Derivation*> mnodes;
            collect(m, mnodes);
            f(*mnodes[i]);
            out.push_back(std::move(m));
        };
        const Derivation& n = *nodes[i];
        if (n.witness) mutate([](Derivation& x) { x.witness = FOTerm::apply("s", {*x.witness}); });
        if (n.pred) mutate([](Derivation& x) { x.pred = Formula::imp(*x.pred, Formula::bot()); });
        if (n.rule == DerivRule::All1Intro || n.rule == DerivRule::All2Intro) {
            // a different eigenvariable no longer matches the premise
            mutate([](Derivation& x) {
                std::string taken = x.rule == DerivRule::All1Intro ? "_taken" : "_Taken";
                x.eigen = taken;
            });
        }
        if (n.rule == DerivRule::All2Elim)
            mutate([](Derivation& x) { x.params.push_back("_extra"); });
    }
    return out;
}

bool adequacy_in_model(const FiniteModel& m, const GoldenDerivation& g, std::string* why) {
    Term t = extract_realizer(g.derivation, g.hyp_realizers);
    for (std::size_t p = 0; p < m.poles().size(); ++p) {
        bool hyps = true;
        for (const auto& h : g.derivation.ctx)
            if (!m.realizes(g.hyp_realizers.at(h.var), h.type, p)) hyps = false;
        if (!hyps) continue;
        if (!m.realizes(t, g.derivation.formula, p)) {
            if (why) *why = g.name + ": " + print(t) + " fails at pole " + std::to_string(p);
            return false;
        }
    }
    return true;
}

// One base stack each, and the continuation of that stack in L0. With a
// single base stack every stack set a realizer can meet in a pole is also met
// by some member of L0, which the realizer checks rely on.
std::vector<NamedModel> corpus_models() {
    std::vector<NamedModel> out;
    // five individuals so that nat(n) -> nat(n + 1) is meaningful up to n = 3
    ModelConfig cfg;
    cfg.individuals = 5;
    cfg.table_domain = 6;
    Term k0 = Term::cont(Stack::bottom(0));
    out.push_back({"pure", FiniteModel({parse_term("\\x y. x"), parse_term("\\x y. y"), parse_term("\\x. x"), k0},
                                       {Stack::bottom(0)}, RuleSet{}, cfg)});
    RuleSet absorb;
    absorb.add("bot", absorb_schema(restricted(1)));
    out.push_back({"absorbing",
                   FiniteModel({parse_term("\\x. x"), restricted(1), restricted(0), k0}, {Stack::bottom(0)}, absorb, cfg)});
    out.push_back({"control", FiniteModel({parse_term("\\x. x"), parse_term("\\k. k (\\x. x)"), k0, nonrestricted(5)},
                                          {Stack::bottom(0)}, RuleSet{}, cfg)});
    return out;
}

}  // namespace lcr
