#include <doctest.h>

#include <random>

#include "lcr/logic.hpp"
#include "lcr/model.hpp"
#include "support/formula_gen.hpp"

using namespace lcr;

namespace {

FOTerm n(std::uint64_t k) { return FOTerm::numeral(k); }

FiniteModel small_model(std::uint64_t individuals = 2) {
    ModelConfig cfg;
    cfg.individuals = individuals;
    return FiniteModel({parse_term("#a0"), parse_term("#a1"), parse_term("\\x. x")},
                       {parse_stack("e0"), parse_stack("e1")}, RuleSet{}, cfg);
}

}  // namespace

TEST_CASE("fo_value examples") {
    CHECK(fo_value(parse_fo_term("s(s(0))")) == 2);
    CHECK(fo_value(parse_fo_term("min(s(0), 0)")) == 0);
    CHECK(fo_value(parse_fo_term("1 | 0")) == 1);
    CHECK(fo_value(parse_fo_term("1 & 0")) == 0);
    CHECK(fo_value(parse_fo_term("~0")) == 1);
    CHECK(fo_value(parse_fo_term("~3")) == 0);
    CHECK(fo_value(parse_fo_term("2 + 3 * 4")) == 14);
    CHECK(fo_value(parse_fo_term("x + 1"), {{"x", 4}}) == 5);
    CHECK_THROWS_AS(fo_value(FOTerm::apply("pow", {n(1), n(2)})), LogicError);
    CHECK_THROWS_AS(fo_value(FOTerm::apply("s", {n(1), n(2)})), LogicError);
    CHECK_THROWS_AS(fo_value(parse_fo_term("y")), LogicError);
}

TEST_CASE("desugar examples") {
    FOTerm a = FOTerm::variable("a"), b = FOTerm::variable("b");
    CHECK(alpha_equal(desugar("=", {}, {a, b}), parse_formula("forall2 W/1. W(a) -> W(b)")));
    CHECK(desugar("!=", {}, {a, b}) == Formula::eq_imp(a, b, Formula::bot()));
    Formula A = Formula::atom("A"), B = Formula::atom("B");
    CHECK(alpha_equal(desugar("and", {A, B}), parse_formula("forall2 W. (A -> B -> W) -> W")));
    CHECK(alpha_equal(desugar("or", {A, B}), parse_formula("forall2 W. (A -> W) -> (B -> W) -> W")));
    CHECK(desugar("not", {A}) == Formula::imp(A, Formula::bot()));
    CHECK(alpha_equal(desugar("ex", {Formula::atom("A", {FOTerm::variable("x")})}, {}, {"x"}),
                      parse_formula("forall2 W. (forall x. A(x) -> W) -> W")));
    CHECK(alpha_equal(desugar("forall-gim", {A}, {}, {"x"}, 2), parse_formula("forall x. min(s(x), 2) = s(x) |> A")));
    CHECK_THROWS_AS(desugar("xor", {A, B}), LogicError);
    // the fresh binder avoids the operands' own Z
    Formula z = Formula::atom("Z");
    Formula c = conj(z, z);
    CHECK(c.name() != "Z");
}

TEST_CASE("formula text") {
    CHECK(print(parse_formula("forall x. X(x) -> Top")) == "forall x. X(x) -> Top");
    CHECK(parse_formula("A -> B -> C") == Formula::imp(Formula::atom("A"), Formula::imp(Formula::atom("B"), Formula::atom("C"))));
    CHECK(parse_formula("(A -> B) -> C").left().kind() == FormulaKind::Imp);
    CHECK(parse_formula("A cap B cup C").kind() == FormulaKind::Cup);
    CHECK(parse_formula("0 != 1") == neq(n(0), n(1)));
    CHECK(parse_formula("(x + 1) = y |> Bot").kind() == FormulaKind::EqImp);
    CHECK(parse_formula("[F](1, x)").kind() == FormulaKind::Const);
    CHECK(alpha_equal(parse_formula("bool(2)"), bool_f(n(2))));
    CHECK(alpha_equal(parse_formula("nat(x)"), nat_f(FOTerm::variable("x"))));
    CHECK(alpha_equal(parse_formula("forall x^2. Top"), forall_gim(2, "x", Formula::top())));
    CHECK_THROWS_AS(parse_formula("forall X. Top"), FormulaParseError);
    CHECK_THROWS_AS(parse_formula("A ->"), FormulaParseError);
    CHECK_THROWS_AS(parse_formula("A $ B"), FormulaParseError);
}

TEST_CASE("property: formula printing round trips") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 400; ++i) {
        Formula f = testing::random_formula(rng, 4);
        std::string s = print(f);
        INFO(s);
        REQUIRE(parse_formula(s) == f);
    }
}

TEST_CASE("substitution avoids capture") {
    // (forall y. x = y)[x := y] renames the binder
    Formula f = Formula::forall("y", eq(FOTerm::variable("x"), FOTerm::variable("y")));
    Formula g = subst_fo(f, "x", FOTerm::variable("y"));
    CHECK(g.name() != "y");
    CHECK(free_fo_vars(g) == std::vector<std::string>{"y"});
    // second order: (forall y. X(y))[X(z) := z = w] keeps w free
    Formula h = Formula::forall("w", Formula::atom("X", {FOTerm::variable("w")}));
    Formula r = subst_pred(h, "X", {"z"}, eq(FOTerm::variable("z"), FOTerm::variable("w")));
    CHECK(free_fo_vars(r) == std::vector<std::string>{"w"});
    CHECK(alpha_equal(r, Formula::forall("v", eq(FOTerm::variable("v"), FOTerm::variable("w")))));
    CHECK_THROWS_AS(subst_pred(Formula::atom("X", {n(0)}), "X", {}, Formula::top()), LogicError);
}

TEST_CASE("check_formula") {
    CHECK_NOTHROW(check_formula(parse_formula("forall2 X/1. X(0) -> X(1)")));
    CHECK_THROWS_AS(check_formula(parse_formula("forall2 X/1. X -> X(1)")), LogicError);
    CHECK_THROWS_AS(check_formula(parse_formula("Y(0) -> Y")), LogicError);
    CHECK_THROWS_AS(check_formula(Formula::atom("X", {FOTerm::apply("min", {n(0)})})), LogicError);
}

TEST_CASE("falsity examples") {
    FiniteModel m = small_model();
    for (std::size_t p = 0; p < m.poles().size(); ++p) {
        CHECK(m.falsity(Formula::top(), p).empty());
        CHECK(m.falsity(Formula::bot(), p) == StackSet(m.stacks().begin(), m.stacks().end()));
        CHECK(m.falsity(neq(n(0), n(1)), p).empty());
    }
    CHECK(m.sem_eq(bool_f(n(0)), parse_formula("forall2 X. X -> Top -> X")));
    CHECK(m.sem_eq(bool_f(n(1)), parse_formula("forall2 X. Top -> X -> X")));
    CHECK(m.sem_eq(bool_f(n(2)), parse_formula("Top -> Top -> Bot")));
    CHECK_THROWS_AS(m.falsity(Formula::atom("X"), 0), LogicError);
    CHECK_THROWS_AS(m.falsity(bool_f(n(7)), 0), LogicError);  // outside the table domain
}

TEST_CASE("equation lemma, closed forms") {
    FiniteModel m = small_model();
    Formula id = parse_formula("forall2 X. X -> X");
    Formula top_bot = parse_formula("Top -> Bot");
    for (std::uint64_t a = 0; a < 3; ++a)
        for (std::uint64_t b = 0; b < 3; ++b) {
            CHECK(m.sem_eq(neq(n(a), n(b)), a != b ? Formula::top() : Formula::bot()));
            CHECK(m.sem_eq(eq(n(a), n(b)), a == b ? id : top_bot));
        }
}

TEST_CASE("realizes examples") {
    FiniteModel m = small_model();
    CHECK(m.realizes_everywhere(parse_term("\\x. x"), parse_formula("forall2 X. X -> X")));
    // \a. \e. e a : ((x = y) |> A) -> (x = y) -> A
    Term swap = parse_term("\\a. \\e. e a");
    for (std::uint64_t a = 0; a < 2; ++a)
        for (std::uint64_t b = 0; b < 2; ++b) {
            // second-order quantifiers range over subsets of the base stacks, so
            // the conclusion must be falsified by base stacks only
            Formula A = Formula::bot();
            Formula f = imps({Formula::eq_imp(n(a), n(b), A), eq(n(a), n(b))}, A);
            CHECK(m.realizes_everywhere(swap, f));
        }
    // k_pi t realizes Bot in every pole containing t * pi
    Term t = parse_term("#a0");
    Stack pi = parse_stack("e1");
    Term kt = Term::cont(pi) * t;
    std::size_t containing = 0;
    for (std::size_t p = 0; p < m.poles().size(); ++p) {
        if (!m.in_pole(t * pi, p)) continue;
        ++containing;
        CHECK(m.realizes(kt, Formula::bot(), p));
    }
    CHECK(containing > 0);
}

TEST_CASE("semantic subtyping") {
    FiniteModel m = small_model();
    Formula A = parse_formula("forall2 X. X -> Top -> X"), B = parse_formula("forall2 X. Top -> X -> X");
    for (std::size_t p = 0; p < m.poles().size(); ++p) {
        StackSet u = m.falsity(A, p), b = m.falsity(B, p);
        u.insert(b.begin(), b.end());
        CHECK(m.falsity(Formula::cap(A, B), p) == u);
    }
    CHECK(m.sem_le(Formula::cap(A, B), A));
    CHECK(m.sem_le(A, Formula::cup(A, B)));
    CHECK(m.sem_eq(A, A));
    CHECK(m.sem_eq(eq(n(1), parse_fo_term("min(2, 1)")), parse_formula("forall2 X. X -> X")));
}

TEST_CASE("property: duality is antitone") {
    FiniteModel m = small_model();
    std::mt19937_64 rng(37);
    std::vector<Stack> universe{parse_stack("e0"), parse_stack("e1"), parse_stack("#a0 . e0"), parse_stack("\\x. x . e1")};
    for (int round = 0; round < 200; ++round) {
        StackSet y;
        for (const auto& s : universe)
            if (rng() & 1) y.insert(s);
        StackSet x;
        for (const auto& s : y)
            if (rng() & 1) x.insert(s);
        std::size_t p = rng() % m.poles().size();
        auto dx = m.dual(x, p), dy = m.dual(y, p);
        for (const auto& t : dy) CHECK(std::find(dx.begin(), dx.end(), t) != dx.end());
    }
}

TEST_CASE("property: arithmetic truth with the empty pole") {
    ModelConfig cfg;
    cfg.individuals = 3;
    cfg.table_domain = 4;
    FiniteModel m({parse_term("#a0"), parse_term("\\x. x")}, {parse_stack("e0")}, RuleSet{}, cfg);
    std::size_t empty = m.poles().size();
    for (std::size_t i = 0; i < m.poles().size(); ++i)
        if (m.poles()[i].members == 0) empty = i;
    REQUIRE(empty < m.poles().size());
    std::mt19937_64 rng(41);
    int trues = 0;
    for (int round = 0; round < 300; ++round) {
        std::vector<std::string> vars;
        Formula f = testing::random_arith(rng, vars, 3);
        std::map<std::string, std::uint64_t> env;
        bool truth = testing::classical(f, cfg.individuals, env);
        trues += truth;
        auto t = m.truth(f, empty);
        INFO(print(f));
        CHECK(t.size() == (truth ? m.terms().size() : 0));
    }
    CHECK(trues > 30);
}

TEST_CASE("world escape is reported") {
    ModelConfig cfg;
    cfg.resolve_fuel = 50;
    FiniteModel m({parse_term("\\x. x")}, {parse_stack("e0")}, RuleSet{}, cfg);
    // Omega cycles: outside every pole, no error
    CHECK_FALSE(m.in_pole(parse_process("(\\x. x x) (\\x. x x)"), 0));
    // an ever-growing term runs out of fuel
    CHECK_THROWS_AS(m.in_pole(parse_process("(\\x. x x x) (\\x. x x x)"), 0), LogicError);
}

TEST_CASE("load_model") {
    FiniteModel m = load_model(R"({"individuals": 2, "terms": ["#a0", "\\x. x"], "stacks": ["e0", "e1"],
                                   "tables": {"F": {"arity": 1, "values": [[0], [1], []]}}})");
    CHECK(m.world().size() == 4);
    CHECK(m.falsity(Formula::constant("F", {n(1)}), 0) == StackSet{parse_stack("e1")});
    CHECK_THROWS_AS(load_model("{"), LogicError);
    CHECK_THROWS_AS(load_model(R"({"terms": [], "stacks": ["e0"], "tables": {"F": {"values": [[3]]}}})"), LogicError);
}
