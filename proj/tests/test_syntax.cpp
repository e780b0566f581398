#include <doctest.h>

#include <random>

#include "lcr/syntax.hpp"
#include "support/gen.hpp"

using namespace lcr;

TEST_CASE("parse_term: grammar examples") {
    CHECK(parse_term("\\x. x") == Term::lam_raw(Term::bound(0)));
    CHECK(parse_term("cc") == Term::cc());
    CHECK(parse_term("#a0 #b1") == Term::app(Term::instr(false, 0), Term::instr(true, 1)));
    // application binds tighter than abstraction and associates to the left
    CHECK(parse_term("\\x. x x x") ==
          Term::lam_raw(Term::app(Term::app(Term::bound(0), Term::bound(0)), Term::bound(0))));
    CHECK(parse_term("\\x y. x") == parse_term("\\a. \\b. a"));
}

TEST_CASE("parse_term: errors") {
    CHECK_THROWS_AS(parse_term("\\x. y"), ParseError);
    CHECK_THROWS_AS(parse_term("(x"), ParseError);
    CHECK_THROWS_AS(parse_term("#c1"), ParseError);
    CHECK_THROWS_AS(parse_term(""), ParseError);
    try {
        parse_term("\\x. x )");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 6);
    }
    ParseOptions open;
    open.allow_free = true;
    CHECK(parse_term("\\x. y", open) == Term::lam_raw(Term::free("y")));
}

TEST_CASE("print_term examples") {
    CHECK(print(Term::lam_raw(Term::bound(0))) == "\\x0. x0");
    CHECK(print(parse_term("\\f. \\x. x")) == "\\f. \\x. x");
    Term T = parse_term("\\x. \\y. y");
    Term torl = lam("x", lam("y", apps(var("x"), {var("y"), T})));
    CHECK(print(torl) == "\\x. \\y. x y (\\x. \\y. y)");
    CHECK(print(Term::cont(stack_of({Term::cc()}))) == "k[cc . e0]");
}

TEST_CASE("printing renames binders that would capture") {
    // \x. \x'. x  where both binders carry the display name "x"
    Term t = Term::lam_raw(Term::lam_raw(Term::bound(1, "x"), "x"), "x");
    std::string s = print(t);
    CHECK(parse_term(s) == t);
    CHECK(s == "\\x. \\x_1. x");
}

TEST_CASE("stacks and processes") {
    Process p = parse_process("\\x. x * #b1 . (\\y. y) . e2");
    CHECK(p.head == parse_term("\\z. z"));
    CHECK(p.stack.length() == 2);
    CHECK(p.stack.bottom_index() == 2);
    CHECK(p.stack.head() == Term::instr(true, 1));
    CHECK(parse_process(print(p)) == p);
    CHECK(parse_process("cc") == Process{Term::cc(), Stack::bottom(0)});
    CHECK_THROWS_AS(parse_stack("x . e0"), ParseError);
}

TEST_CASE("substitute") {
    Term u = parse_term("\\z. z");
    CHECK(substitute(var("x"), {{"x", u}}) == u);
    CHECK(substitute(lam("y", var("x")), {{"x", Term::cc()}}) == parse_term("\\y. cc"));
    // (x x)[x := \d. y (d d)] with y left free
    ParseOptions open;
    open.allow_free = true;
    Term delta = parse_term("\\d. y (d d)", open);
    Term body = substitute(var("x") * var("x"), {{"x", delta}});
    CHECK(body == delta * delta);
    // binder named like the replaced variable shields its body
    CHECK(substitute(lam("x", var("x")), {{"x", Term::cc()}}) == parse_term("\\x. x"));
}

TEST_CASE("is_proof_like") {
    CHECK(is_proof_like(Term::cc()));
    CHECK_FALSE(is_proof_like(Term::instr(true, 1)));
    CHECK(is_proof_like(parse_term("\\x. x #a0")));
    CHECK_FALSE(is_proof_like(Term::cont(Stack::bottom(0))));
}

TEST_CASE("property: parse . print is the identity") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        Term t = testing::random_term(rng, 1 + rng() % 25);
        std::string s = print(t);
        INFO(s);
        REQUIRE(parse_term(s) == t);
    }
}

TEST_CASE("property: disjoint simultaneous substitution equals sequential") {
    std::mt19937_64 rng(11);
    ParseOptions open;
    open.allow_free = true;
    for (int i = 0; i < 200; ++i) {
        Term shape = testing::random_term(rng, 3 + rng() % 15);
        std::vector<std::pair<std::string, Term>> b{{"x", testing::random_term(rng, 4)},
                                                    {"y", testing::random_term(rng, 4)}};
        Term open_t = apps(var("x"), {shape, var("y"), var("x")});
        Term sim = substitute(open_t, b);
        Term seq1 = substitute(substitute(open_t, {b[0]}), {b[1]});
        Term seq2 = substitute(substitute(open_t, {b[1]}), {b[0]});
        CHECK(sim == seq1);
        CHECK(sim == seq2);
    }
}

TEST_CASE("property: proof-likeness composes") {
    std::mt19937_64 rng(13);
    testing::GenOptions o;
    o.allow_restricted = false;
    for (int i = 0; i < 200; ++i) {
        Term a = testing::random_term(rng, 1 + rng() % 10, o);
        Term b = testing::random_term(rng, 1 + rng() % 10, o);
        REQUIRE(is_proof_like(a));
        CHECK(is_proof_like(a * b));
        CHECK(is_proof_like(Term::lam_raw(a)));
    }
}

TEST_CASE("continuations parse back from their printed form") {
    Term k = Term::cont(stack_of({parse_term("\\x. x"), restricted(1)}, 2));
    CHECK(print(k) == "k[(\\x. x) . #b1 . e2]");
    CHECK(parse_term(print(k)) == k);
    Process p = parse_process("k[e1] (\\y. y) * k[#a0 . e0] . e3");
    CHECK(parse_process(print(p)) == p);
    CHECK(p.head.fun() == Term::cont(Stack::bottom(1)));
    CHECK_THROWS_AS(parse_term("k[e0"), ParseError);
    CHECK_THROWS_AS(parse_term("k[x . e0]"), ParseError);
    // k on its own is still an ordinary name
    CHECK(parse_term("\\k. k") == parse_term("\\x. x"));
}
