// Acceptance run: one line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "lcr/adequacy.hpp"
#include "lcr/corpus.hpp"
#include "lcr/machine.hpp"
#include "lcr/nondet.hpp"
#include "lcr/suites.hpp"
#include "support/beta_oracle.hpp"
#include "support/gen.hpp"

using namespace lcr;

namespace {

struct Result {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string summary(const SuiteReport& r) {
    std::string s = std::to_string(r.count(Outcome::Pass)) + "/" + std::to_string(r.records.size()) + " checks";
    for (const auto& rec : r.records)
        if (rec.outcome == Outcome::Fail) return s + ", first failure " + rec.check + ": " + rec.detail;
    return s;
}

const SuiteRecord* find(const SuiteReport& r, const std::string& check) {
    for (const auto& rec : r.records)
        if (rec.check == check) return &rec;
    return nullptr;
}

bool passed(const SuiteReport& r, const std::string& check) {
    const SuiteRecord* rec = find(r, check);
    return rec && rec->outcome == Outcome::Pass;
}

// 1. run against the named beta reducer, fuel 10^4, 500 terms of size <= 30
Result machine_fidelity() {
    std::mt19937_64 rng(2024);
    int agree = 0, halted = 0;
    std::string first;
    const int total = 500;
    for (int i = 0; i < total; ++i) {
        Term t = testing::random_pure(rng, 2 + rng() % 29);
        Trace tr = run_quiet(Process{t, Stack::bottom(0)}, 10000);
        auto ref = oracle::whnf(t, 10000);
        bool ok;
        if (tr.status == RunStatus::Stuck) {
            ++halted;
            ok = ref && tr.final.head == *ref && tr.final.stack.is_bottom();
        } else {
            ok = !ref;
        }
        if (ok)
            ++agree;
        else if (first.empty())
            first = print(t);
    }
    std::string d = std::to_string(agree) + "/" + std::to_string(total) + " agree (" + std::to_string(halted) +
                    " halting)";
    if (!first.empty()) d += ", first disagreement " + first;
    return {agree == total, d};
}

// 3. closed forms computed here from pole membership alone
Result falsity_lemmas() {
    std::size_t checks = 0, bad = 0;
    std::string first;
    auto expect = [&](const FiniteModel& m, std::size_t p, const Formula& a, const StackSet& want, const std::string& what) {
        ++checks;
        if (m.falsity(a, p) != want) {
            ++bad;
            if (first.empty()) first = what;
        }
    };
    for (const auto& [name, m] : lemma_models()) {
        ++checks;
        if (m.world().size() > 12 || m.config().individuals != 2) {
            ++bad;
            if (first.empty()) first = name + " is larger than |world| 12, N 2";
        }
        const auto& L = m.terms();
        const auto& S = m.stacks();
        for (std::size_t p = 0; p < m.poles().size(); ++p) {
            auto in = [&](const Term& t, const Stack& s) { return m.in_pole(t * s, p); };
            auto realizes_bot = [&](const Term& t) {
                for (const auto& s : S)
                    if (!in(t, s)) return false;
                return true;
            };
            StackSet bottoms(S.begin(), S.end()), pairs, id;
            for (const auto& t : L)
                for (const auto& s : S) {
                    pairs.insert(push_all({t}, s));
                    if (in(t, s)) id.insert(push_all({t}, s));
                }
            // (a) equations and inequations
            for (std::uint64_t a = 0; a < 3; ++a)
                for (std::uint64_t b = 0; b < 3; ++b) {
                    FOTerm x = FOTerm::numeral(a), y = FOTerm::numeral(b);
                    std::string at = name + " (" + std::to_string(a) + "," + std::to_string(b) + ")";
                    expect(m, p, eq(x, y), a == b ? id : pairs, "eq " + at);
                    expect(m, p, neq(x, y), a == b ? bottoms : StackSet{}, "neq " + at);
                }
            // (b), (c) for n <= 3, over all argument tuples
            for (std::size_t n = 1; n <= 3; ++n) {
                StackSet nd, gm;
                std::vector<std::size_t> idx(n, 0);
                while (true) {
                    std::vector<Term> ts;
                    for (auto i : idx) ts.push_back(L[i]);
                    std::size_t not_bot = 0;
                    for (const auto& t : ts) not_bot += !realizes_bot(t);
                    for (const auto& s : S) {
                        std::size_t outside = 0;
                        for (const auto& t : ts) outside += !in(t, s);
                        if (outside <= 1) nd.insert(push_all(ts, s));
                        if (not_bot <= 1) gm.insert(push_all(ts, s));
                    }
                    std::size_t k = 0;
                    while (k < n && ++idx[k] == L.size()) idx[k++] = 0;
                    if (k == n) break;
                }
                expect(m, p, nondet_f(n), nd, name + " nondet " + std::to_string(n));
                expect(m, p, gim2_models(nondisjoint_f(n)), gm, name + " gim2 A_" + std::to_string(n));
            }
            // (d) bool(0), bool(1), bool(n > 1)
            for (std::uint64_t n = 0; n <= 3; ++n) {
                StackSet want;
                for (const auto& t : L)
                    for (const auto& u : L)
                        for (const auto& s : S)
                            if (n > 1 || in(n == 0 ? t : u, s)) want.insert(push_all({t, u}, s));
                expect(m, p, bool_f(FOTerm::numeral(n)), want, name + " bool " + std::to_string(n));
            }
        }
    }
    std::string d = std::to_string(checks - bad) + "/" + std::to_string(checks) + " checks exact";
    if (!first.empty()) d += ", first mismatch " + first;
    return {bad == 0, d};
}

Result from_suite(const std::string& name, bool details = false) {
    SuiteReport r = run_suite(name);
    std::string d = summary(r);
    if (details)
        for (const auto& rec : r.records) d += "; " + rec.check + ": " + rec.detail;
    return {r.ok() && r.count(Outcome::Unknown) == 0, d};
}

Result voting() {
    SuiteReport r = run_suite("voting");
    const SuiteRecord* agreeing = find(r, "gimel2/phi-agreeing");
    bool ok = passed(r, "gimel2/phi-agreeing") && passed(r, "gimel2/phi-random") &&
              passed(r, "fork-world/biconditional") && passed(r, "gimel2-world/biconditional");
    return {ok, (agreeing ? agreeing->detail + "; " : "") + summary(r)};
}

Result realizers() {
    SuiteReport r = run_suite("gimel-realizers");
    bool ok = true;
    for (const char* n : {"gimel1", "gimel2"})
        for (const char* k : {"/bot", "/chi", "/phi"}) ok = ok && passed(r, std::string(n) + k);
    return {ok && r.ok(), summary(r)};
}

Result parallel_or() {
    SuiteReport r = run_suite("parallel-or");
    std::string d = summary(r);
    for (const char* c : {"torl", "torr"})
        if (const SuiteRecord* rec = find(r, c)) d += "; " + std::string(c) + " " + rec->detail;
    bool ok = passed(r, "r-bridge(phi)") && passed(r, "torl") && passed(r, "torr") &&
              passed(r, "l-bridge(r-bridge(phi))");
    return {ok, d};
}

Result adequacy() {
    auto golden = golden_derivations();
    std::set<DerivRule> rules;
    std::function<void(const Derivation&)> walk = [&](const Derivation& d) {
        rules.insert(d.rule);
        for (const auto& p : d.premises) walk(p);
    };
    for (const auto& g : golden) walk(g.derivation);
    SuiteReport r = run_suite("adequacy");
    bool ok = golden.size() >= 10 && rules.size() == 10 && r.ok();
    return {ok, std::to_string(golden.size()) + " derivations covering " + std::to_string(rules.size()) +
                    " rules; " + summary(r)};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit;  // seconds, 0 for none
        std::function<Result()> run;
    };
    std::vector<Criterion> criteria{
        {1, "machine fidelity", 10, machine_fidelity},
        {2, "determinism", 0, [] { return from_suite("determinism"); }},
        {3, "falsity lemmas", 60, falsity_lemmas},
        {4, "duality roundtrip", 0, [] { return from_suite("multieval"); }},
        {5, "voting specification", 0, voting},
        {6, "gimel realizers", 0, realizers},
        {7, "consistency evidence", 120, [] { return from_suite("consistency", true); }},
        {8, "parallel-or bridges", 0, parallel_or},
        {9, "adequacy corpus", 0, adequacy},
        {10, "nat toolkit", 0, [] { return from_suite("nat"); }},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = Clock::now();
        Result r = c.run();
        double s = seconds_since(t0);
        bool in_time = c.limit == 0 || s < c.limit;
        bool pass = r.pass && in_time;
        failed += !pass;
        std::printf("%s %2d %-22s %s (%.2f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name, r.detail.c_str(), s,
                    c.limit > 0 ? (" < " + std::to_string(static_cast<int>(c.limit)) + " s").c_str() : "");
    }
    std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
