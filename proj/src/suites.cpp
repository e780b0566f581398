#include "lcr/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lcr/adequacy.hpp"
#include "lcr/corpus.hpp"
#include "lcr/gen.hpp"
#include "lcr/gimel.hpp"
#include "lcr/machine.hpp"
#include "lcr/multieval.hpp"
#include "lcr/nondet.hpp"

namespace lcr {

std::size_t SuiteReport::count(Outcome o) const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [&](const SuiteRecord& r) { return r.outcome == o; }));
}

namespace {

using Rng = std::mt19937_64;

SuiteRecord record(std::string check, bool pass, std::string detail) {
    return {std::move(check), pass ? Outcome::Pass : Outcome::Fail, std::move(detail)};
}

// every tuple of length n over `terms`, first coordinate slowest
std::vector<std::vector<Term>> tuples(const std::vector<Term>& terms, std::size_t n) {
    std::vector<std::vector<Term>> out{{}};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::vector<Term>> next;
        for (const auto& prefix : out)
            for (const auto& t : terms) {
                next.push_back(prefix);
                next.back().push_back(t);
            }
        out = std::move(next);
    }
    return out;
}

std::string describe(const StackSet& got, const StackSet& want) {
    for (const auto& s : got)
        if (!want.count(s)) return "unexpected " + print(s);
    for (const auto& s : want)
        if (!got.count(s)) return "missing " + print(s);
    return "equal";
}

// -- falsity-lemmas -----------------------------------------------------------

struct LemmaCase {
    std::string name;
    Formula formula;
    std::function<StackSet(const FiniteModel&, std::size_t)> expected;
};

std::vector<LemmaCase> lemma_cases() {
    std::vector<LemmaCase> out;
    auto top_bot = [](const FiniteModel& m, std::size_t) {
        StackSet s;
        for (const auto& t : m.terms())
            for (const auto& pi : m.stacks()) s.insert(push_all({t}, pi));
        return s;
    };
    auto id = [](const FiniteModel& m, std::size_t p) {
        StackSet s;
        for (const auto& t : m.terms())
            for (const auto& pi : m.stacks())
                if (m.in_pole(t * pi, p)) s.insert(push_all({t}, pi));
        return s;
    };
    auto bot = [](const FiniteModel& m, std::size_t) { return StackSet(m.stacks().begin(), m.stacks().end()); };
    auto top = [](const FiniteModel&, std::size_t) { return StackSet{}; };
    for (std::uint64_t a = 0; a < 3; ++a)
        for (std::uint64_t b = 0; b < 3; ++b) {
            std::string ab = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
            FOTerm x = FOTerm::numeral(a), y = FOTerm::numeral(b);
            if (a == b) {
                out.push_back({"eq" + ab, eq(x, y), id});
                out.push_back({"neq" + ab, neq(x, y), bot});
            } else {
                out.push_back({"eq" + ab, eq(x, y), top_bot});
                out.push_back({"neq" + ab, neq(x, y), top});
            }
        }
    for (std::size_t n = 1; n <= 3; ++n) {
        // at most one i with t_i * pi outside the pole
        out.push_back({"nondet(" + std::to_string(n) + ")", nondet_f(n), [n](const FiniteModel& m, std::size_t p) {
                           StackSet s;
                           for (const auto& ts : tuples(m.terms(), n))
                               for (const auto& pi : m.stacks()) {
                                   std::size_t out_of = 0;
                                   for (const auto& t : ts) out_of += !m.in_pole(t * pi, p);
                                   if (out_of <= 1) s.insert(push_all(ts, pi));
                               }
                           return s;
                       }});
        // at most one t_i fails to realize Bot
        out.push_back({"gim2-nondisjoint(" + std::to_string(n) + ")", gim2_models(nondisjoint_f(n)),
                       [n](const FiniteModel& m, std::size_t p) {
                           StackSet s;
                           for (const auto& ts : tuples(m.terms(), n)) {
                               std::size_t not_bot = 0;
                               for (const auto& t : ts) not_bot += !m.realizes(t, Formula::bot(), p);
                               if (not_bot > 1) continue;
                               for (const auto& pi : m.stacks()) s.insert(push_all(ts, pi));
                           }
                           return s;
                       }});
    }
    // bool(0) = forall X. X -> Top -> X, bool(1) = forall X. Top -> X -> X, bool(n) = Top -> Top -> Bot
    for (std::uint64_t n = 0; n <= 3; ++n)
        out.push_back({"bool(" + std::to_string(n) + ")", bool_f(FOTerm::numeral(n)),
                       [n](const FiniteModel& m, std::size_t p) {
                           StackSet s;
                           for (const auto& t : m.terms())
                               for (const auto& u : m.terms())
                                   for (const auto& pi : m.stacks()) {
                                       bool in = n == 0 ? m.in_pole(t * pi, p) : n == 1 ? m.in_pole(u * pi, p) : true;
                                       if (in) s.insert(push_all({t, u}, pi));
                                   }
                           return s;
                       }});
    return out;
}

SuiteReport falsity_lemmas(std::uint64_t) {
    SuiteReport rep;
    auto cases = lemma_cases();
    for (const auto& [mname, m] : lemma_models())
        for (const auto& c : cases) {
            std::string detail = std::to_string(m.poles().size()) + " poles";
            bool pass = true;
            for (std::size_t p = 0; p < m.poles().size() && pass; ++p) {
                StackSet got = m.falsity(c.formula, p), want = c.expected(m, p);
                if (got != want) {
                    pass = false;
                    detail = "pole " + std::to_string(m.poles()[p].members) + ": " + describe(got, want);
                }
            }
            rep.records.push_back(record(mname + "/" + c.name, pass, detail));
        }
    return rep;
}

// -- multieval ----------------------------------------------------------------

struct NamedWorld {
    std::string name;
    RuleSet rules;
    FiniteWorld world;
};

std::vector<NamedWorld> small_worlds() {
    std::vector<NamedWorld> out;
    for (std::uint32_t n = 1; n <= 4; ++n) {
        std::vector<Process> ps;
        for (std::uint32_t i = 0; i < n; ++i) ps.push_back(nonrestricted(i) * Stack::bottom(0));
        out.push_back({"stuck-" + std::to_string(n), RuleSet{}, FiniteWorld(ps)});
    }
    Term id = parse_term("\\x. x");
    out.push_back({"steps", RuleSet{},
                   FiniteWorld::close({id * stack_of({nonrestricted(0)}), id * stack_of({nonrestricted(1)})}, RuleSet{})});
    RuleSet absorb;
    absorb.add("bot", absorb_schema(restricted(1)));
    out.push_back({"absorb", absorb,
                   FiniteWorld::close({restricted(1) * Stack::bottom(0), id * stack_of({restricted(1)}),
                                       nonrestricted(0) * Stack::bottom(0)},
                                      absorb)});
    RuleSet vote;
    vote.add("vote", voting_schema(nonrestricted(0), 2));
    out.push_back({"vote", vote,
                   FiniteWorld::close({nonrestricted(0) * stack_of({restricted(1), restricted(0)})}, vote)});
    for (auto& w : out) {
        std::string why;
        if (!w.world.validate(w.rules, &why)) throw std::logic_error("world " + w.name + ": " + why);
    }
    return out;
}

SuiteReport multieval_suite(std::uint64_t seed) {
    SuiteReport rep;
    Rng rng(seed);
    for (const auto& w : small_worlds()) {
        const FiniteWorld& world = w.world;
        std::vector<Pole> poles = poles_of(w.rules, world);
        bool pass = true;
        std::string detail = std::to_string(world.size()) + " processes, 50 structures";
        for (int k = 0; k < 50 && pass; ++k) {
            std::vector<Pole> structure;
            for (const auto& p : poles)
                if (rng() % 2) structure.push_back(p);
            if (poles_of(relation_of(structure, world), world) != structure) {
                pass = false;
                std::ostringstream os;
                os << "structure";
                for (const auto& p : structure) os << " " << p.members;
                os << " does not round trip";
                detail = os.str();
            }
        }
        rep.records.push_back(record(w.name + "/roundtrip", pass, detail));

        pass = true;
        detail = "20 seeds";
        FiniteRelation base = relation_of_rules(w.rules, world);
        for (int k = 0; k < 20 && pass; ++k) {
            FiniteRelation seed_rel = base;
            for (int j = 0, m = static_cast<int>(rng() % 4); j < m; ++j)
                seed_rel.insert(rng() & world.full(), rng() & world.full());
            FiniteRelation c = closure(seed_rel, world);
            AxiomReport ax = check_axioms(c, world);
            if (!ax.ok()) {
                pass = false;
                detail = std::string("closure violates ") + to_string(ax.violations[0].kind) + ": " +
                         ax.violations[0].detail;
            }
            for (auto [p, q] : seed_rel.pairs())
                if (!c.contains(p, q)) {
                    pass = false;
                    detail = "closure drops a seed pair";
                }
            if (poles_of(c, world) != poles_of(seed_rel, world)) {
                pass = false;
                detail = "closure changes the poles";
            }
        }
        rep.records.push_back(record(w.name + "/closure", pass, detail));
    }
    return rep;
}

// -- determinism --------------------------------------------------------------

Process random_process(Rng& rng) {
    GenOptions o;
    Term head = random_term(rng, 1 + rng() % 12, o);
    std::vector<Term> items;
    for (std::size_t i = 0, m = rng() % 4; i < m; ++i) {
        if (rng() % 5 == 0)
            items.push_back(Term::cont(stack_of({random_term(rng, 1 + rng() % 4, o)}, rng() % 3)));
        else
            items.push_back(random_term(rng, 1 + rng() % 6, o));
    }
    return head * stack_of(items, static_cast<std::uint32_t>(rng() % 3));
}

bool same(const StepOutcome& a, const StepOutcome& b) {
    if (a.stepped != b.stepped) return false;
    return a.stepped ? a.next == b.next && a.rule == b.rule : a.reason == b.reason;
}

SuiteReport determinism(std::uint64_t seed) {
    SuiteReport rep;
    Rng rng(seed);
    for (int batch = 0; batch < 10; ++batch) {
        bool pass = true;
        std::string detail = "1000 processes";
        for (int k = 0; k < 1000; ++k) {
            Process p = random_process(rng);
            StepOutcome a = step(p), b = step(p), c = step(parse_process(print(p)));
            if (!same(a, b) || !same(a, c)) {
                pass = false;
                detail = "step not single-valued on " + print(p);
                break;
            }
        }
        rep.records.push_back(record("batch-" + std::to_string(batch), pass, detail));
    }
    return rep;
}

// -- voting -------------------------------------------------------------------

const Term kTop = restricted(0);
const Term kBot = restricted(1);

CheckOptions depth_options(std::size_t depth, std::size_t conclusion_cap = 0) {
    CheckOptions o;
    o.depth_cap = depth;
    o.conclusion_cap = conclusion_cap;
    return o;
}

std::string first_failure(const CheckReport& r) {
    for (const auto& res : r.results)
        if (res.outcome == Outcome::Fail) return res.instance.label + ": " + print(res.instance.conclusion) + " " + res.detail;
    return "";
}

// the two-out-of-three world: fork, must and an absorbing bot
FiniteModel fork_world_model(const Term& phi, std::size_t n, const RuleSet& rules) {
    std::vector<Term> terms{kBot, kTop};
    Stack e0 = Stack::bottom(0);
    std::vector<Process> extra;
    for (const auto& ts : tuples(terms, n)) extra.push_back(phi * push_all(ts, e0));
    return FiniteModel(terms, {e0}, rules, {}, extra);
}

SuiteReport voting_suite(std::uint64_t seed) {
    SuiteReport rep;
    Rng rng(seed);
    GimelConfig cfg = gimel_preset(2);
    RuleSet rules = gimel_rules(cfg);
    auto probes = default_term_probes(kBot, kTop);
    auto stacks = default_stack_probes({true_t(), kTop});
    auto agreeing = agreeing_voting_samples(3, {kBot, lam("x", kBot) * omega_t()}, probes, stacks, 100, rng);
    CheckReport r = check_voting(cfg.phi_term(), 3, rules, agreeing, depth_options(30));
    rep.records.push_back(record("gimel2/phi-agreeing", r.count(Outcome::Pass) == agreeing.size(),
                                 std::to_string(r.count(Outcome::Pass)) + "/" + std::to_string(agreeing.size()) +
                                     " pass at depth 30 " + first_failure(r)));
    auto random = random_voting_samples(3, probes, stacks, 100, rng);
    r = check_voting(cfg.phi_term(), 3, rules, random, depth_options(30));
    rep.records.push_back(record("gimel2/phi-random", r.count(Outcome::Fail) == 0,
                                 std::to_string(r.count(Outcome::Pass)) + " pass, " +
                                     std::to_string(r.count(Outcome::Unknown)) + " with premises outside the pole " +
                                     first_failure(r)));

    // finite-world biconditional: phi realizes nondet(n) iff it is n-voting
    RuleSet fork_rules;
    fork_rules.add("fork", voting_schema(nonrestricted(0), 2, 1));
    fork_rules.add("must", must_schema(nonrestricted(1)));
    fork_rules.add("bot", absorb_schema(kBot));
    std::vector<Term> candidates{nonrestricted(0), nonrestricted(1), parse_term("\\x y. x"), parse_term("\\x y. y"),
                                 lams({"x", "y"}, kBot)};
    GenOptions gen;
    gen.max_instr = 1;
    while (candidates.size() < 60) candidates.push_back(random_term(rng, 1 + rng() % 6, gen));
    std::size_t decided = 0, voting = 0;
    std::string bad;
    for (const auto& phi : candidates) {
        try {
            VotingEquivalence e = voting_equivalence(fork_world_model(phi, 2, fork_rules), phi, 2);
            ++decided;
            voting += e.voting;
            if (e.realizes != e.voting && bad.empty()) bad = print(phi);
        } catch (const WorldTooLarge&) {
        } catch (const LogicError&) {
        }
    }
    rep.records.push_back(record("fork-world/biconditional", bad.empty() && decided > 0,
                                 bad.empty() ? std::to_string(decided) + " candidates decided, " +
                                                   std::to_string(voting) + " voting"
                                             : "sides disagree on " + bad));
    bad.clear();
    decided = voting = 0;
    // candidates whose applications stay inside a world small enough to enumerate
    for (const auto& phi : {cfg.phi_term(), nonrestricted(5), kBot}) {
        try {
            VotingEquivalence e = voting_equivalence(fork_world_model(phi, 3, rules), phi, 3);
            ++decided;
            voting += e.voting;
            if (e.realizes != e.voting && bad.empty()) bad = print(phi);
        } catch (const WorldTooLarge& ex) {
            if (bad.empty()) bad = print(phi) + " (" + ex.what() + ")";
        }
    }
    rep.records.push_back(record("gimel2-world/biconditional", bad.empty() && voting >= 1,
                                 bad.empty() ? std::to_string(decided) + " candidates decided, " +
                                                   std::to_string(voting) + " voting"
                                             : "sides disagree on " + bad));
    return rep;
}

// -- gimel-realizers ----------------------------------------------------------

SuiteReport gimel_realizers(std::uint64_t seed) {
    SuiteReport rep;
    for (std::size_t n = 1; n <= 3; ++n) {
        GimelConfig cfg = gimel_preset(n);
        CheckReport r = check_gimel_realizers(cfg, default_gimel_samples(cfg, 50, seed + n));
        std::map<std::string, std::pair<std::size_t, std::size_t>> by_kind;  // label prefix -> (pass, total)
        for (const auto& res : r.results) {
            std::string kind = res.instance.label.substr(0, res.instance.label.find(' '));
            by_kind[kind].second++;
            by_kind[kind].first += res.outcome == Outcome::Pass;
        }
        for (const auto& [kind, counts] : by_kind)
            rep.records.push_back(record("gimel" + std::to_string(n) + "/" + kind, counts.first == counts.second,
                                         std::to_string(counts.first) + "/" + std::to_string(counts.second) +
                                             " pass " + first_failure(r)));
    }
    return rep;
}

// -- consistency --------------------------------------------------------------

SuiteReport consistency(std::uint64_t seed) {
    SuiteReport rep;
    Rng rng(seed);
    const std::size_t radius = 8;
    std::size_t covers = 0, anti = 0;
    std::string cover_bad, anti_bad;
    for (int i = 0; i < 200; ++i) {
        std::size_t n = 1 + i % 2;
        std::uint32_t gammas = 1 + static_cast<std::uint32_t>(rng() % 3);
        GimelConfig cfg = gimel_preset(n, gammas + n);
        Process p = random_sound_process(rng, 2 + rng() % 11, gammas);
        CoverResult c = cover_check(p, radius, cfg);
        if (c.pass)
            ++covers;
        else if (cover_bad.empty())
            cover_bad = "gimel(" + std::to_string(n) + ") " + print(p);
        RuleSet rules = gimel_rules(cfg);
        PoleSearch search(rules);
        bool ok = true;
        for (std::size_t r = 0; r <= radius; ++r)
            if (!antitonicity_violations(content_r(p, r, cfg, search)).empty()) ok = false;
        if (ok)
            ++anti;
        else if (anti_bad.empty())
            anti_bad = print(p);
    }
    rep.records.push_back(record("cover", cover_bad.empty(),
                                 cover_bad.empty() ? std::to_string(covers) + "/200 processes at r = 8"
                                                   : "covered: " + cover_bad));
    rep.records.push_back(record("antitone", anti_bad.empty(),
                                 anti_bad.empty() ? std::to_string(anti) + "/200 processes, r = 0..8"
                                                  : "violation: " + anti_bad));

    // proof-like terms never reach the smallest pole against a bottom stack
    GenOptions gen;
    gen.allow_restricted = false;
    gen.max_instr = 1;
    std::string bad;
    for (std::size_t n = 1; n <= 2 && bad.empty(); ++n) {
        RuleSet rules = gimel_rules(gimel_preset(n));
        PoleSearch search(rules);
        for (int i = 0; i < 200; ++i) {
            Term t = random_term(rng, 1 + rng() % 10, gen);
            if (search.depth(t * Stack::bottom(0), 10)) {
                bad = "gimel(" + std::to_string(n) + ") " + print(t);
                break;
            }
        }
    }
    rep.records.push_back(record("proof-like-bottom", bad.empty(),
                                 bad.empty() ? "400 proof-like terms, none in at r <= 10" : "in the pole: " + bad));
    return rep;
}

// -- parallel-or --------------------------------------------------------------

SuiteReport parallel_or(std::uint64_t) {
    SuiteReport rep;
    GimelConfig cfg = gimel_preset(2);
    RuleSet rules = gimel_rules(cfg);
    auto samples = boolean_samples(2, {true_t(), false_t(), omega_t()}, {kBot, kTop}, {Stack::bottom(0)});
    CheckOptions opts = depth_options(8, 40);
    CheckReport r = check_behavior({Behavior::ParallelOr}, por_r_t() * cfg.phi_term(), rules, samples, opts);
    rep.records.push_back(record("r-bridge(phi)", r.count(Outcome::Fail) == 0 && r.count(Outcome::Pass) > 0,
                                 std::to_string(r.count(Outcome::Pass)) + " pass, " +
                                     std::to_string(r.count(Outcome::Unknown)) + " unknown " + first_failure(r)));
    struct Sequential {
        const char* name;
        Term term;
        const char* fails;
    };
    for (const auto& s : {Sequential{"torl", torl_t(), "(T, 1) -> 1"}, Sequential{"torr", torr_t(), "(1, T) -> 1"}}) {
        CheckReport q = check_behavior({Behavior::ParallelOr}, s.term, rules, samples, opts);
        std::set<std::string> failing;
        std::string example;
        for (const auto& res : q.results)
            if (res.outcome == Outcome::Fail) {
                failing.insert(res.instance.label);
                if (example.empty()) example = print(res.instance.conclusion);
            }
        bool pass = failing == std::set<std::string>{s.fails};
        std::string detail = "fails";
        for (const auto& f : failing) detail += " [" + f + "]";
        if (!example.empty()) detail += ", e.g. " + example;
        rep.records.push_back(record(s.name, pass, detail));
    }
    // l applied to the r-bridge output, on the A3-style families
    std::vector<BehaviorSample> a3;
    for (std::size_t j = 0; j < 3; ++j) {
        std::vector<Term> args(3, kBot);
        for (const auto& other : {kTop, true_t(), omega_t()}) {
            args[j] = other;
            a3.push_back({args, Stack::bottom(0), {j}});
        }
    }
    Term l = por_l_t() * (por_r_t() * cfg.phi_term());
    CheckReport lr = check_behavior({Behavior::Voting, 3, 1}, l, rules, a3, depth_options(8, 60));
    rep.records.push_back(record("l-bridge(r-bridge(phi))", lr.verdict() == Outcome::Pass,
                                 std::to_string(lr.count(Outcome::Pass)) + "/" + std::to_string(lr.results.size()) +
                                     " pass " + first_failure(lr)));
    return rep;
}

// -- adequacy -----------------------------------------------------------------

SuiteReport adequacy_suite(std::uint64_t) {
    SuiteReport rep;
    auto models = corpus_models();
    for (const auto& g : golden_derivations()) {
        auto rej = check_derivation(g.derivation);
        rep.records.push_back(record(g.name + "/accepted", !rej, rej ? to_string(*rej) : "accepted"));
        std::size_t total = 0, rejected = 0;
        for (const auto& m : payload_mutations(g.derivation)) {
            ++total;
            rejected += check_derivation(m).has_value();
        }
        rep.records.push_back(record(g.name + "/mutations", rejected == total,
                                     std::to_string(rejected) + "/" + std::to_string(total) + " rejected"));
        for (const auto& m : models) {
            std::string why;
            bool ok = !rej && adequacy_in_model(m.model, g, &why);
            rep.records.push_back(record(g.name + "/" + m.name, ok,
                                         ok ? std::to_string(m.model.poles().size()) + " poles" : why));
        }
    }
    return rep;
}

// -- nat ----------------------------------------------------------------------

SuiteReport nat_suite(std::uint64_t) {
    SuiteReport rep;
    for (const auto& m : corpus_models()) {
        bool zero = m.model.realizes_everywhere(church_t(0), nat_f(FOTerm::numeral(0)));
        rep.records.push_back(record(m.name + "/church(0)", zero, "nat(0)"));
        for (std::uint64_t n = 0; n <= 3; ++n) {
            Formula step = Formula::imp(nat_f(FOTerm::numeral(n)), nat_f(FOTerm::numeral(n + 1)));
            rep.records.push_back(record(m.name + "/succ(" + std::to_string(n) + ")",
                                         m.model.realizes_everywhere(church_succ_t(), step), print(step)));
        }
    }
    std::vector<Term> psis{nonrestricted(0), restricted(1), parse_term("\\a b. a"), Term::cont(Stack::bottom(2))};
    std::vector<Stack> pis{Stack::bottom(0), parse_stack("(\\x. x) . e1"), parse_stack("#a1 . #b0 . e0")};
    for (const auto& psi : psis)
        for (const auto& pi : pis) {
            Term y = substitute(y_psi_t("psi"), {{"psi", psi}});
            Process expected = psi * push_all({church_t(0), church_succ_t() * y}, pi);
            Trace tr = run(y * pi, 10);
            std::size_t at = 0;
            bool found = false;
            for (; at < tr.steps.size() && !found; ++at) found = tr.steps[at].result == expected;
            rep.records.push_back(record("unroll " + print(y * pi), found,
                                         found ? "reaches " + print(expected) + " after " + std::to_string(at) + " steps"
                                               : "never reaches " + print(expected)));
        }
    return rep;
}

using SuiteFn = SuiteReport (*)(std::uint64_t);

const std::vector<std::pair<std::string, SuiteFn>>& registry();

}  // namespace

std::vector<std::pair<std::string, FiniteModel>> lemma_models() {
    ModelConfig cfg;
    cfg.individuals = 2;
    cfg.table_domain = 4;
    std::vector<std::pair<std::string, FiniteModel>> out;
    out.emplace_back("instructions", FiniteModel({parse_term("\\x. x"), nonrestricted(0), Term::cont(Stack::bottom(0))},
                                                 {Stack::bottom(0), Stack::bottom(1)}, RuleSet{}, cfg));
    GimelConfig g = gimel_preset(2);
    out.emplace_back("gimel2", FiniteModel({g.bot_term(), g.top_term(), g.phi_term(), parse_term("\\x. x")},
                                           {Stack::bottom(0)}, gimel_rules(g), cfg));
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

bool has_suite(const std::string& name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
    for (const auto& [n, fn] : registry())
        if (n == name) {
            SuiteReport rep = fn(seed);
            rep.suite = name;
            rep.seed = seed;
            return rep;
        }
    std::string known;
    for (const auto& n : suite_names()) known += " " + n;
    throw std::invalid_argument("unknown suite '" + name + "'; suites:" + known + ", all");
}

namespace {

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"falsity-lemmas", falsity_lemmas},
        {"multieval", multieval_suite},
        {"determinism", determinism},
        {"voting", voting_suite},
        {"gimel-realizers", gimel_realizers},
        {"consistency", consistency},
        {"parallel-or", parallel_or},
        {"adequacy", adequacy_suite},
        {"nat", nat_suite},
    };
    return r;
}

}  // namespace

}  // namespace lcr
