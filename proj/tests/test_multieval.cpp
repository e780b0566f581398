#include <doctest.h>

#include <algorithm>
#include <random>

#include "lcr/machine.hpp"
#include "lcr/multieval.hpp"

using namespace lcr;

namespace {

Process stuck(std::uint32_t i) { return Term::instr(false, i) * Stack::bottom(0); }
// p steps to stuck(i)
Process steps_to(std::uint32_t i) { return parse_term("\\x. x") * stack_of({Term::instr(false, i)}); }

std::vector<Mask> members(const std::vector<Pole>& ps) {
    std::vector<Mask> out;
    for (const auto& p : ps) out.push_back(p.members);
    std::sort(out.begin(), out.end());
    return out;
}

// Independent check of the pole condition, straight from the definition.
bool is_pole_of(Mask s, const FiniteRelation& rel) {
    for (auto [p, q] : rel.pairs())
        if ((q & ~s) == 0 && (p & s) == 0) return false;
    return true;
}

RuleSet gimel_like() {
    RuleSet rules;
    rules.add("vote", voting_schema(Term::instr(false, 0), 3));
    rules.add("absorb", absorb_schema(Term::instr(true, 1)));
    return rules;
}

}  // namespace

TEST_CASE("check_axioms: intersecting pairs satisfy everything") {
    FiniteWorld w({stuck(0), stuck(1)});
    REQUIRE(w.validate(RuleSet{}));
    FiniteRelation rel(2);
    for (Mask p = 0; p < 4; ++p)
        for (Mask q = 0; q < 4; ++q)
            if (p & q) rel.insert(p, q);
    CHECK(check_axioms(rel, w).ok());
}

TEST_CASE("check_axioms: a lone pair misses identity") {
    FiniteWorld w({stuck(0), stuck(1)});
    REQUIRE(w.validate(RuleSet{}));
    FiniteRelation rel(2);
    rel.insert(1, 2);
    auto report = check_axioms(rel, w);
    CHECK_FALSE(report.ok());
    bool identity = std::any_of(report.violations.begin(), report.violations.end(), [](const AxiomViolation& v) {
        return v.kind == AxiomViolation::Kind::Identity && v.p == 1 && v.q == 1;
    });
    CHECK(identity);
}

TEST_CASE("check_axioms requires a validated world") {
    FiniteWorld w({steps_to(0)});
    CHECK_FALSE(w.validate(RuleSet{}));
    CHECK_THROWS_AS(check_axioms(FiniteRelation(1), w), std::logic_error);
}

TEST_CASE("closure examples") {
    SUBCASE("empty seed, one stuck process") {
        FiniteWorld w({stuck(0)});
        REQUIRE(w.validate(RuleSet{}));
        FiniteRelation c = closure(FiniteRelation(1), w);
        CHECK(c.count() == 1);
        CHECK(c.contains(1, 1));
    }
    SUBCASE("seed {p} |> {} on two stuck processes") {
        FiniteWorld w({stuck(0), stuck(1)});
        REQUIRE(w.validate(RuleSet{}));
        FiniteRelation seed(2);
        seed.insert(1, 0);
        FiniteRelation c = closure(seed, w);
        for (Mask p = 0; p < 4; ++p)
            for (Mask q = 0; q < 4; ++q) {
                bool expected = (p & 1) || (p & q);
                CHECK(c.contains(p, q) == expected);
            }
    }
    SUBCASE("deterministic step") {
        FiniteWorld w = FiniteWorld::close({steps_to(0)}, RuleSet{});
        REQUIRE(w.size() == 2);
        FiniteRelation c = closure(FiniteRelation(2), w);
        Mask p = w.mask_of({steps_to(0)}), q = w.mask_of({stuck(0)});
        CHECK(c.contains(p, q));
        CHECK(c.contains(p, p | q));
        CHECK_FALSE(c.contains(q, p));
        CHECK(check_axioms(c, w).ok());
    }
}

TEST_CASE("property: closures satisfy the axioms and keep the seed's poles") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 60; ++round) {
        std::size_t n = 1 + rng() % 4;
        std::vector<Process> ps;
        for (std::uint32_t i = 0; i < n; ++i) ps.push_back(stuck(i));
        FiniteWorld w(ps);
        REQUIRE(w.validate(RuleSet{}));
        FiniteRelation seed(n);
        for (int k = 0, m = rng() % 4; k < m; ++k) seed.insert(rng() & w.full(), rng() & w.full());
        FiniteRelation c = closure(seed, w);
        CHECK(check_axioms(c, w).ok());
        for (auto [p, q] : seed.pairs()) CHECK(c.contains(p, q));
        CHECK(members(poles_of(c, w)) == members(poles_of(seed, w)));
    }
}

TEST_CASE("poles_of examples") {
    SUBCASE("one deterministic step") {
        FiniteWorld w = FiniteWorld::close({steps_to(0)}, RuleSet{});
        Mask p = w.mask_of({steps_to(0)}), q = w.mask_of({stuck(0)});
        CHECK(members(poles_of(RuleSet{}, w)) == std::vector<Mask>{0, p, p | q});
    }
    SUBCASE("one stuck process") {
        FiniteWorld w({stuck(0)});
        REQUIRE(w.validate(RuleSet{}));
        CHECK(members(poles_of(RuleSet{}, w)) == std::vector<Mask>{0, 1});
    }
    SUBCASE("an absorbing rule forces membership") {
        RuleSet rules;
        rules.add("absorb", absorb_schema(Term::instr(true, 1)));
        Process bot = Term::instr(true, 1) * Stack::bottom(0);
        FiniteWorld w({bot, stuck(0)});
        REQUIRE(w.validate(rules));
        Mask b = w.mask_of({bot});
        CHECK(members(poles_of(rules, w)) == std::vector<Mask>{b, w.full()});
    }
}

TEST_CASE("property: enumerated poles meet the pole condition") {
    RuleSet rules = gimel_like();
    Term phi = Term::instr(false, 0), bot = Term::instr(true, 1);
    Process seed = phi * stack_of({bot, parse_term("\\x. x"), Term::instr(false, 5)});
    FiniteWorld w = FiniteWorld::close({seed}, rules);
    FiniteRelation rel = relation_of_rules(rules, w);
    auto poles = poles_of(rules, w);
    CHECK(members(poles) == members(poles_of(rel, w)));
    for (Mask s = 0; s <= w.full(); ++s) {
        bool listed = std::find(poles.begin(), poles.end(), Pole{s}) != poles.end();
        CHECK(listed == is_pole_of(s, rel));
    }
}

TEST_CASE("relation_of examples") {
    SUBCASE("the empty structure relates everything") {
        FiniteWorld w({stuck(0), stuck(1)});
        FiniteRelation r = relation_of({}, w);
        CHECK(r.count() == 16);
    }
    SUBCASE("all poles give back the closure of the rules") {
        RuleSet rules = gimel_like();
        Process seed = Term::instr(false, 0) * stack_of({Term::instr(true, 1), parse_term("\\x. x"), Term::instr(false, 5)});
        FiniteWorld w = FiniteWorld::close({seed}, rules);
        REQUIRE(w.size() <= 6);
        FiniteRelation from_poles = relation_of(poles_of(rules, w), w);
        FiniteRelation generated = closure(relation_of_rules(rules, w), w);
        CHECK(from_poles == generated);
    }
}

TEST_CASE("property: structure roundtrip") {
    std::mt19937_64 rng(19);
    for (int round = 0; round < 200; ++round) {
        std::size_t n = 1 + rng() % 4;
        std::vector<Process> ps;
        for (std::uint32_t i = 0; i < n; ++i) ps.push_back(stuck(i));
        FiniteWorld w(ps);
        std::vector<Pole> structure;
        for (Mask s = 0; s <= w.full(); ++s)
            if (rng() % 3 == 0) structure.push_back({s});
        CHECK(poles_of(relation_of(structure, w), w) == structure);
    }
}

TEST_CASE("pole_membership examples") {
    RuleSet rules;
    rules.add("absorb", absorb_schema(Term::instr(true, 1)));
    CHECK(to_string(pole_membership(rules, parse_process("#b1 * e0"), 10)) == "IN 1");
    CHECK(to_string(pole_membership(rules, parse_process("#b0 * e0"), 10)) == "UNKNOWN 10");
    CHECK(to_string(pole_membership(rules, parse_process("\\x. x * #b1 . e0"), 10)) == "IN 2");
    CHECK(to_string(pole_membership(rules, parse_process("\\x. x * #b1 . e0"), 1)) == "UNKNOWN 1");
    // Omega never reaches the pole
    CHECK_FALSE(pole_membership(rules, parse_process("(\\x. x x) (\\x. x x)"), 40).in);
}

TEST_CASE("pole_membership: the voting rule") {
    RuleSet rules = gimel_like();
    // phi * bot . bot . T: dropping T leaves two absorbed processes
    auto v = pole_membership(rules, parse_process("#a0 * #b1 . #b1 . #b0 . e0"), 5, true);
    CHECK(to_string(v) == "IN 2");
    REQUIRE(v.why);
    CHECK(v.why->rule == "vote");
    std::string why;
    CHECK(replay(*v.why, rules, &why));
    // two tops: every choice keeps one of them
    CHECK_FALSE(pole_membership(rules, parse_process("#a0 * #b1 . #b0 . #b0 . e0"), 8).in);
}

TEST_CASE("property: verdicts are monotone in the cap and replay") {
    RuleSet rules = gimel_like();
    std::vector<std::string> heads{"#b1", "#b0", "\\x. x", "\\x. \\y. y", "\\x. \\y. x", "#a0"};
    std::mt19937_64 rng(23);
    PoleSearch shared(rules);
    for (int round = 0; round < 150; ++round) {
        std::vector<Term> args;
        for (int k = 0; k < 3 + int(rng() % 3); ++k) args.push_back(parse_term(heads[rng() % heads.size()]));
        Process p = parse_term(heads[rng() % heads.size()]) * stack_of(args);
        auto first = pole_membership(rules, p, 12);
        for (std::size_t cap = 0; cap <= 12; ++cap) {
            auto v = pole_membership(rules, p, cap, true);
            if (first.in && cap >= first.depth) {
                CHECK(v.in);
                CHECK(v.depth == first.depth);
                std::string why;
                CHECK_MESSAGE(replay(*v.why, rules, &why), why);
            } else {
                CHECK_FALSE(v.in);
            }
            // a shared memo answers the same as a fresh search
            CHECK(shared.verdict(p, cap) == v);
        }
    }
}

TEST_CASE("replay rejects a forged justification") {
    RuleSet rules;
    rules.add("absorb", absorb_schema(Term::instr(true, 1)));
    Justification j{parse_process("#b0 * e0"), "absorb", 1, {}};
    std::string why;
    CHECK_FALSE(replay(j, rules, &why));
    CHECK(why.find("no rule instance") != std::string::npos);
}
