#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>
#include <set>

#include "lcr/adequacy.hpp"
#include "lcr/corpus.hpp"
#include "lcr/machine.hpp"
#include "lcr/nondet.hpp"
#include "support/formula_gen.hpp"

using namespace lcr;

namespace {

Formula F(const char* s) { return parse_formula(s); }

void collect_rules(const Derivation& d, std::set<DerivRule>& out) {
    out.insert(d.rule);
    for (const auto& p : d.premises) collect_rules(p, out);
}

const FiniteModel& pure_model() {
    static FiniteModel m = corpus_models()[0].model;
    return m;
}

}  // namespace

TEST_CASE("derivation examples") {
    Derivation k = imp_intro(imp_intro(axiom({{"x", F("A")}, {"y", F("B")}}, "x")));
    CHECK_FALSE(check_derivation(k));
    CHECK(k.term == parse_term("\\x y. x"));
    CHECK(alpha_equal(k.formula, F("A -> B -> A")));

    Derivation cc = peirce({}, F("A"), F("B"));
    CHECK_FALSE(check_derivation(cc));
    CHECK(alpha_equal(cc.formula, F("((A -> B) -> A) -> A")));

    // x free in the context
    Derivation bad = all1_intro(axiom({{"h", F("Z(x)")}}, "h"), "x");
    auto r = check_derivation(bad);
    REQUIRE(r);
    CHECK(r->reason.find("freshness") != std::string::npos);
    CHECK(r->path.empty());

    // second-order freshness
    auto r2 = check_derivation(all2_intro(axiom({{"h", F("X")}}, "h"), "X", 0));
    REQUIRE(r2);
    CHECK(r2->reason.find("freshness") != std::string::npos);
}

TEST_CASE("derivation rejections") {
    Derivation k = imp_intro(imp_intro(axiom({{"x", F("A")}, {"y", F("B")}}, "x")));
    Derivation wrong = k;
    wrong.formula = F("A -> B -> B");
    CHECK(check_derivation(wrong));
    wrong = k;
    wrong.premises[0].premises[0].term = var("y");
    auto r = check_derivation(wrong);
    REQUIRE(r);
    CHECK(r->path == std::vector<std::size_t>{0});
    wrong = k;
    wrong.premises.clear();
    CHECK(check_derivation(wrong));
    CHECK(check_derivation(top_intro({}, var("free"))));
    Derivation dup = axiom({{"x", F("A")}, {"x", F("B")}}, "x");
    CHECK(check_derivation(dup));
    Derivation w = all1_elim(axiom({{"h", F("forall y. Z(y)")}}, "h"), FOTerm::numeral(1));
    w.formula = F("Z(0)");
    CHECK(check_derivation(w));
}

TEST_CASE("extract_realizer") {
    Derivation d = axiom({{"x", F("A")}}, "x");
    CHECK(extract_realizer(d, {{"x", parse_term("\\y. y")}}) == parse_term("\\y. y"));
    CHECK_THROWS_AS(extract_realizer(d), AdequacyError);
}

TEST_CASE("golden derivations") {
    auto golden = golden_derivations();
    CHECK(golden.size() >= 10);
    std::set<DerivRule> used;
    for (const auto& g : golden) {
        INFO(g.name);
        auto r = check_derivation(g.derivation);
        CHECK_MESSAGE(!r, (r ? to_string(*r) : ""));
        CHECK(is_closed(g.derivation.formula));
        collect_rules(g.derivation, used);
    }
    CHECK(used.size() == 10);
    for (const auto& g : golden)
        if (g.name == "church-succ") {
            CHECK(g.derivation.term == church_succ_t());
            CHECK(alpha_equal(g.derivation.formula, F("forall x. nat(x) -> nat(s(x))")));
        }
}

TEST_CASE("golden derivations round trip through text") {
    for (const auto& g : golden_derivations()) {
        std::string text = print_derivation(g.derivation);
        INFO(text);
        Derivation back = parse_derivation(text);
        CHECK_FALSE(check_derivation(back));
        CHECK(print_derivation(back) == text);
    }
    CHECK_THROWS_AS(parse_derivation("(deriv Axiom (term \"x\")"), DerivationParseError);
    CHECK_THROWS_AS(parse_derivation("(deriv Nope (term \"x\") (formula \"Top\"))"), DerivationParseError);
    CHECK_THROWS_AS(parse_derivation("(deriv Axiom (term \"\\x.\") (formula \"Top\"))"), DerivationParseError);
    Derivation d = parse_derivation("; comment\n(deriv TopIntro (term \"\\x. x\") (formula \"Top\"))");
    CHECK_FALSE(check_derivation(d));
}

TEST_CASE("payload mutations are rejected") {
    std::size_t total = 0;
    for (const auto& g : golden_derivations())
        for (const auto& m : payload_mutations(g.derivation)) {
            INFO(g.name << "\n" << print_derivation(m));
            CHECK(check_derivation(m).has_value());
            ++total;
        }
    CHECK(total >= 10);
}

TEST_CASE("adequacy in corpus models") {
    auto models = corpus_models();
    for (const auto& g : golden_derivations())
        for (const auto& m : models) {
            std::string why;
            INFO(g.name << " in " << m.name);
            CHECK_MESSAGE(adequacy_in_model(m.model, g, &why), why);
        }
}

TEST_CASE("horn realizers") {
    FOTerm x = FOTerm::variable("x"), y = FOTerm::variable("y");
    HornClause sym{{"x", "y"}, {{x, y}}, Equation{y, x}};
    Term t = horn_realizer(sym, {true, {}});
    CHECK(t == parse_term("\\t. \\y. t y"));
    CHECK(pure_model().realizes_everywhere(t, sym.formula()));

    HornClause zero_one{{}, {}, Equation{FOTerm::numeral(0), FOTerm::numeral(1)}};
    Term f = horn_realizer(zero_one, {false, {}});
    CHECK(f == parse_term("\\f. f"));
    CHECK(alpha_equal(horn_realized_formula(zero_one, {false, {}}), F("(0 = 1) -> Top -> Bot")));
    CHECK(pure_model().realizes_everywhere(f, horn_realized_formula(zero_one, {false, {}})));

    HornClause succ{{"x"}, {{FOTerm::apply("s", {x}), FOTerm::numeral(0)}}, std::nullopt};
    Term g = horn_realizer(succ, {true, {}});
    CHECK(g == parse_term("\\t. t (\\y. y)"));
    CHECK(pure_model().realizes_everywhere(g, succ.formula()));

    CHECK_THROWS_AS(horn_realizer(sym, {false, {0, 0}}), AdequacyError);
    CHECK_THROWS_AS(horn_realizer(HornClause{{"x"}, {}, Equation{y, x}}, {true, {}}), LogicError);
    CHECK(horn_counterexample(sym, 3) == std::nullopt);
    CHECK(horn_counterexample(HornClause{{"x"}, {}, Equation{x, FOTerm::numeral(1)}}, 3) ==
          std::vector<std::uint64_t>{0});
}

TEST_CASE("property: horn realizers realize") {
    ModelConfig cfg;
    cfg.individuals = 2;
    cfg.table_domain = 6;
    FiniteModel m({parse_term("\\x y. x"), parse_term("\\x. x")}, {Stack::bottom(0)}, RuleSet{}, cfg);
    std::mt19937_64 rng(71);
    int checked = 0, falses = 0;
    for (int round = 0; round < 150; ++round) {
        std::vector<std::string> vars{"x", "y"};
        vars.resize(1 + rng() % 2);
        HornClause h;
        h.vars = vars;
        std::size_t np = rng() % 3;
        for (std::size_t i = 0; i < np; ++i)
            h.premises.push_back({testing::random_fo(rng, vars, 1), testing::random_fo(rng, vars, 1)});
        if (rng() % 3) h.goal = Equation{testing::random_fo(rng, vars, 1), testing::random_fo(rng, vars, 1)};
        auto cex = horn_counterexample(h, cfg.individuals);
        HornTruth truth{!cex, cex.value_or(std::vector<std::uint64_t>{})};
        if (truth.holds && !h.definite() && h.premises.empty()) continue;
        Term t = horn_realizer(h, truth);
        INFO(print(h.formula()) << " realized by " << print(t));
        try {
            CHECK(m.realizes_everywhere(t, horn_realized_formula(h, truth)));
            ++checked;
            falses += !truth.holds;
        } catch (const LogicError&) {
            // a value left the table domain
        }
    }
    CHECK(checked > 80);
    CHECK(falses > 5);
}

TEST_CASE("nat toolkit") {
    CHECK(std::get<Term>(build_nat("church", {0})) == parse_term("\\f x. x"));
    CHECK(std::get<Term>(build_nat("church-succ")) == parse_term("\\n f x. n f (f x)"));
    CHECK(alpha_equal(std::get<Formula>(build_nat("nat-formula", {2})), F("nat(2)")));
    CHECK_THROWS_AS(build_nat("church"), AdequacyError);

    for (const auto& nm : corpus_models()) {
        INFO(nm.name);
        const FiniteModel& m = nm.model;
        CHECK(m.realizes_everywhere(church_t(0), nat_f(FOTerm::numeral(0))));
        CHECK(m.sem_eq(nat_f(FOTerm::numeral(0)), F("forall2 Z. Top -> Z -> Z")));
        for (std::uint64_t n = 0; n <= 3; ++n) {
            Formula step = Formula::imp(nat_f(FOTerm::numeral(n)), nat_f(FOTerm::numeral(n + 1)));
            CHECK(m.realizes_everywhere(church_succ_t(), step));
        }
    }
}

TEST_CASE("property: Y unrolling") {
    std::mt19937_64 rng(73);
    std::vector<Term> psis{nonrestricted(0), restricted(1), parse_term("\\a b. a"), Term::cont(Stack::bottom(2))};
    std::vector<Stack> pis{Stack::bottom(0), parse_stack("(\\x. x) . e1"), parse_stack("#a1 . #b0 . e0")};
    for (const auto& psi : psis)
        for (const auto& pi : pis) {
            Term y = substitute(y_psi_t("psi"), {{"psi", psi}});
            Process expected = psi * push_all({church_t(0), church_succ_t() * y}, pi);
            Trace tr = run(y * pi, 10);
            bool found = false;
            for (const auto& s : tr.steps) found = found || s.result == expected;
            INFO(print(psi) << " / " << print(pi));
            CHECK(found);
        }
    CHECK(nat_l_t() == lam("psi", y_psi_t("psi")));
}

TEST_CASE("checked-in derivation files match the golden corpus") {
    for (const auto& g : golden_derivations()) {
        std::ifstream in(std::string(LCR_SOURCE_DIR) + "/corpus/derivations/" + g.name + ".sexp");
        REQUIRE_MESSAGE(in.good(), g.name);
        std::stringstream text;
        text << in.rdbuf();
        Derivation d = parse_derivation(text.str());
        CHECK_FALSE(check_derivation(d));
        CHECK(print_derivation(d) == print_derivation(g.derivation));
    }
}
