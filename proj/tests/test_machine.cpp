#include <doctest.h>

#include <chrono>
#include <random>
#include <sstream>

#include "lcr/machine.hpp"
#include "support/beta_oracle.hpp"
#include "support/gen.hpp"

using namespace lcr;

namespace {

Term church(int n) {
    Term body = var("x");
    for (int i = 0; i < n; ++i) body = var("f") * body;
    return lams({"f", "x"}, body);
}

Term church_succ() { return parse_term("\\n. \\f. \\x. n f (f x)"); }

std::vector<Rule> rules_of(const Trace& t) {
    std::vector<Rule> out;
    for (const auto& s : t.steps) out.push_back(s.rule);
    return out;
}

Term unwind(const Process& p) {
    Term t = p.head;
    for (Stack s = p.stack; !s.is_bottom(); s = s.tail()) t = t * s.head();
    return t;
}

}  // namespace

TEST_CASE("step: the four rules") {
    Term t = Term::instr(true, 2), u = Term::instr(true, 3);
    Stack pi = stack_of({Term::instr(true, 4)});

    auto o = step(Process{t * u, pi});
    REQUIRE(o.stepped);
    CHECK(o.rule == Rule::Push);
    CHECK(o.next == Process{t, Stack::cons(u, pi)});

    o = step(Process{parse_term("\\x. x"), Stack::cons(u, pi)});
    REQUIRE(o.stepped);
    CHECK(o.rule == Rule::Grab);
    CHECK(o.next == Process{u, pi});

    o = step(Process{Term::cc(), Stack::cons(t, pi)});
    REQUIRE(o.stepped);
    CHECK(o.rule == Rule::Save);
    CHECK(o.next == Process{t, Stack::cons(Term::cont(pi), pi)});

    Stack other = stack_of({}, 1);
    o = step(Process{Term::cont(other), Stack::cons(t, pi)});
    REQUIRE(o.stepped);
    CHECK(o.rule == Rule::Restore);
    CHECK(o.next == Process{t, other});
}

TEST_CASE("step: stuck processes") {
    CHECK(step(parse_process("#a0 * e0")).reason == StuckReason::BareInstruction);
    CHECK_FALSE(step(parse_process("#a0 * e0")).stepped);
    CHECK(step(parse_process("\\x. x * e0")).reason == StuckReason::EmptyStackAbstraction);
    CHECK(step(parse_process("cc * e0")).reason == StuckReason::BottomReached);
    CHECK(step(Process{Term::cont(Stack::bottom(0)), Stack::bottom(0)}).reason ==
          StuckReason::ContinuationEmptyStack);
}

TEST_CASE("run: identity and fuel") {
    Trace t = run(parse_process("\\x. x * #b3 . e0"), 2);
    CHECK(t.final == parse_process("#b3 * e0"));
    CHECK(t.status == RunStatus::Stuck);
    CHECK(t.fuel_used == 1);

    Term omega = parse_term("(\\x. x x) (\\x. x x)");
    Trace d = run(Process{omega, Stack::bottom(0)}, 50);
    CHECK(d.status == RunStatus::FuelExhausted);
    CHECK(d.fuel_used == 50);
    CHECK(d.steps.size() == 50);
}

TEST_CASE("run: Y unrolls to t * Y_t . pi") {
    Term t = Term::instr(false, 5);
    Term delta = lam("d", t * (var("d") * var("d")));
    Term Y = delta * delta;
    Stack pi = stack_of({Term::instr(true, 1)});
    Trace tr = run(Process{Y, pi}, 3);
    CHECK(tr.final == Process{t, Stack::cons(Y, pi)});
    CHECK(rules_of(tr) == std::vector<Rule>{Rule::Push, Rule::Grab, Rule::Push});
}

TEST_CASE("run: church 2 applied agrees with the oracle") {
    Term two = church_succ() * (church_succ() * church(0));
    Term f = Term::instr(true, 2), x = Term::instr(true, 3);
    Trace tr = run(Process{two, stack_of({f, x})}, 1000);
    REQUIRE(tr.status == RunStatus::Stuck);
    CHECK(tr.stuck_reason == StuckReason::BareInstruction);
    auto reference = oracle::whnf(apps(two, {var("f"), var("x")}), 1000);
    REQUIRE(reference);
    CHECK(unwind(tr.final) == substitute(*reference, {{"f", f}, {"x", x}}));
}

TEST_CASE("save/restore golden corpus") {
    struct Golden {
        const char* process;
        std::vector<Rule> rules;
        const char* final;
    };
    std::vector<Golden> corpus{
        {"cc (\\k. k #b1) * #b2 . e0", {Rule::Push, Rule::Save, Rule::Grab, Rule::Push, Rule::Restore},
         "#b1 * #b2 . e0"},
        {"cc (\\k. #b3) * #b2 . e0", {Rule::Push, Rule::Save, Rule::Grab}, "#b3 * #b2 . e0"},
        {"cc * (\\k. k #b1 #b4) . e0", {Rule::Save, Rule::Grab, Rule::Push, Rule::Push, Rule::Restore},
         "#b1 * e0"},
        {"cc (\\k. (\\z. k z) #b5) * e1", {Rule::Push, Rule::Save, Rule::Grab, Rule::Push, Rule::Grab, Rule::Push, Rule::Restore},
         "#b5 * e1"},
    };
    for (const auto& g : corpus) {
        INFO(g.process);
        Trace tr = run(parse_process(g.process), 100);
        CHECK(rules_of(tr) == g.rules);
        CHECK(tr.final == parse_process(g.final));
    }
}

TEST_CASE("property: step is single-valued") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 2000; ++i) {
        Term h = testing::random_term(rng, 1 + rng() % 12);
        std::vector<Term> items;
        for (int k = rng() % 4; k > 0; --k) items.push_back(testing::random_term(rng, 1 + rng() % 6));
        Process p{h, stack_of(items, static_cast<std::uint32_t>(rng() % 2))};
        auto a = step(p), b = step(p);
        REQUIRE(a.stepped == b.stepped);
        if (a.stepped) {
            CHECK(a.rule == b.rule);
            CHECK(a.next == b.next);
        }
    }
}

TEST_CASE("property: run agrees with the beta oracle on pure terms") {
    std::mt19937_64 rng(5);
    int agreed = 0, halted = 0;
    for (int i = 0; i < 300; ++i) {
        Term t = testing::random_pure(rng, 2 + rng() % 20);
        Trace tr = run_quiet(Process{t, Stack::bottom(0)}, 10000);
        auto ref = oracle::whnf(t, 10000);
        if (tr.status == RunStatus::Stuck) {
            ++halted;
            REQUIRE(ref);
            CHECK(tr.final.head == *ref);
            CHECK(tr.final.stack.is_bottom());
        } else {
            CHECK_FALSE(ref);
        }
        ++agreed;
    }
    CHECK(agreed == 300);
    CHECK(halted > 100);
}

TEST_CASE("trace serialization") {
    Trace tr = run(parse_process("(\\x. x) #b1"), 10);
    std::ostringstream text, jsonl;
    write_trace_text(text, tr);
    write_trace_jsonl(jsonl, tr);
    CHECK(text.str() == "init | (\\x. x) #b1 | e0\npush | \\x. x | #b1 . e0\ngrab | #b1 | e0\n"
                        "stuck (bare-instruction) after 2 steps\n");
    CHECK(jsonl.str().find("\"rule\":\"grab\"") != std::string::npos);
}
