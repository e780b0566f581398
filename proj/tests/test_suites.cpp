#include <doctest.h>

#include "lcr/suites.hpp"

using namespace lcr;

TEST_CASE("every suite passes with the default seed") {
    for (const auto& name : suite_names()) {
        SuiteReport r = run_suite(name);
        INFO(name);
        CHECK(r.suite == name);
        CHECK_FALSE(r.records.empty());
        for (const auto& rec : r.records) {
            INFO(rec.check << ": " << rec.detail);
            CHECK(rec.outcome != Outcome::Fail);
        }
    }
    CHECK_THROWS_AS(run_suite("no-such-suite"), std::invalid_argument);
}

TEST_CASE("suite reports depend only on the seed") {
    for (const char* name : {"voting", "consistency", "determinism"}) {
        SuiteReport a = run_suite(name, 7), b = run_suite(name, 7);
        REQUIRE(a.records.size() == b.records.size());
        for (std::size_t i = 0; i < a.records.size(); ++i) {
            CHECK(a.records[i].check == b.records[i].check);
            CHECK(a.records[i].detail == b.records[i].detail);
        }
    }
}

TEST_CASE("lemma models stay small") {
    for (const auto& [name, m] : lemma_models()) {
        INFO(name);
        CHECK(m.world().size() <= 12);
        CHECK(m.config().individuals == 2);
    }
}
