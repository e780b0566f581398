#include <doctest.h>

#include <random>

#include "lcr/gimel.hpp"
#include "support/gen.hpp"

using namespace lcr;

TEST_CASE("gimel_rules instances") {
    SUBCASE("phi with n = 1") {
        RuleSet rules = gimel_rules(gimel_preset(1));
        Process p = parse_process("#a0 * (\\x. x) . cc . e0");
        auto inst = rules.instances(p);
        REQUIRE(inst.size() == 2);
        CHECK(inst[0].rule == "phi");
        CHECK(inst[0].targets == std::vector<Process>{parse_process("cc * e0")});
        CHECK(inst[1].targets == std::vector<Process>{parse_process("\\x. x * e0")});
    }
    SUBCASE("chi with n = 2") {
        RuleSet rules = gimel_rules(gimel_preset(2));
        auto inst = rules.instances(parse_process("#a1 * cc . e0"));
        REQUIRE(inst.size() == 1);
        CHECK(inst[0].targets ==
              std::vector<Process>{parse_process("cc * #b0 . #b1 . e0"), parse_process("cc * #b1 . #b0 . e0")});
    }
    SUBCASE("bot") {
        RuleSet rules = gimel_rules(gimel_preset(2));
        auto inst = rules.instances(parse_process("#b1 * e0"));
        REQUIRE(inst.size() == 1);
        CHECK(inst[0].targets.empty());
        CHECK(rules.instances(parse_process("#b0 * e0")).empty());
    }
    SUBCASE("phi needs n + 1 arguments") {
        RuleSet rules = gimel_rules(gimel_preset(2));
        CHECK(rules.instances(parse_process("#a0 * cc . cc . e0")).empty());
    }
}

TEST_CASE("config validation") {
    GimelConfig cfg = gimel_preset(2, 3);
    cfg.chi = cfg.phi;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = gimel_preset(2);
    cfg.gamma_base = 0;
    cfg.indices = {1};
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("replace_K") {
    GimelConfig cfg = gimel_preset(1, 2);
    Process g0 = parse_process("#b2 * e0");
    CHECK(replace_K(g0, {0}, cfg) == parse_process("#b0 * e0"));
    CHECK(replace_K(g0, {}, cfg) == parse_process("#b1 * e0"));
    Process plain = parse_process("\\x. x #a0 * cc . e0");
    CHECK(replace_K(plain, {0, 1}, cfg) == plain);
    // gammas inside continuation constants are replaced too
    Process k = Term::cont(stack_of({restricted(3)})) * Stack::bottom(0);
    CHECK(replace_K(k, {1}, cfg) == Term::cont(stack_of({restricted(0)})) * Stack::bottom(0));
    CHECK_THROWS_AS(replace_K(parse_process("#b9 * e0"), {}, cfg), std::invalid_argument);
    CHECK_THROWS_AS(replace_K(g0, {5}, cfg), std::invalid_argument);
}

TEST_CASE("content examples") {
    GimelConfig cfg = gimel_preset(1, 2);
    ContentSet c = content_r(parse_process("#b2 * e0"), 2, cfg);
    // K without index 0: bits over I = {0, 1}
    CHECK(c.members == std::vector<Mask>{0b00, 0b10});
    ContentSet none = content_r(parse_process("\\x. x * e0"), 6, cfg);
    CHECK(none.members.empty());
}

TEST_CASE("is_sound") {
    GimelConfig cfg = gimel_preset(2, 1);
    CHECK(is_sound(parse_process("#b2 * e0"), cfg));
    CHECK_FALSE(is_sound(parse_process("#b1 * e0"), cfg));
    CHECK(is_sound(parse_process("\\x. x * #b0 . e0"), cfg));
}

TEST_CASE("cover_check examples") {
    GimelConfig cfg = gimel_preset(1, 2);
    CHECK(cover_check(parse_process("#b2 * e0"), 8, cfg).pass);
    CHECK_THROWS_AS(cover_check(parse_process("#b1 * e0"), 8, cfg), std::invalid_argument);
    GimelConfig three = gimel_preset(1, 3);
    for (std::size_t r = 0; r <= 8; ++r) CHECK(cover_check(parse_process("#a0 * #b2 . #b3 . e0"), r, three).pass);
    // too few fresh indices
    CHECK_THROWS_AS(cover_check(parse_process("#b2 * #b3 . e0"), 4, cfg), std::invalid_argument);
}

TEST_CASE("cover_check reports a covering tuple once fork joins the rules") {
    // fork * top . bot . pi and fork * bot . top . pi both reach bot * pi, so
    // chi * fork . e0 is in the pole for every K.
    GimelConfig cfg = fork_preset();
    cfg.indices = {0, 1};
    CoverResult res = cover_check(parse_process("#a1 * #a2 . e0"), 6, cfg);
    CHECK_FALSE(res.pass);
    REQUIRE(res.witness.size() == 2);
    CHECK(res.witness[0] == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("property: content is monotone in r and antitone in K") {
    std::mt19937_64 rng(29);
    for (int round = 0; round < 150; ++round) {
        std::uint32_t gammas = 1 + rng() % 3;
        GimelConfig cfg = gimel_preset(1 + rng() % 2, gammas + 2);
        Process p = testing::random_sound_process(rng, 2 + rng() % 11, gammas);
        RuleSet rules = gimel_rules(cfg);
        PoleSearch search(rules);
        ContentSet prev;
        for (std::size_t r = 0; r <= 6; ++r) {
            ContentSet c = content_r(p, r, cfg, search);
            CHECK(antitonicity_violations(c).empty());
            if (r > 0)
                for (Mask m : prev.members) CHECK(c.contains(m));
            prev = c;
        }
    }
}
