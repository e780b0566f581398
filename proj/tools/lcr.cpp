// lcr: command-line front end for the realizability toolkit.
//
// Exit status: 0 success / check passed, 1 check failed, 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "lcr/adequacy.hpp"
#include "lcr/config.hpp"
#include "lcr/corpus.hpp"
#include "lcr/gimel.hpp"
#include "lcr/machine.hpp"
#include "lcr/model.hpp"
#include "lcr/multieval.hpp"
#include "lcr/nondet.hpp"
#include "lcr/suites.hpp"

using namespace lcr;
using json = nlohmann::json;

namespace {

constexpr const char* kGrammar = R"(Text grammars:
  term     t ::= x | \x y. t | t t | cc | #aN | #bN | k[stack] | (t)
                 #aN is a nonrestricted instruction, #bN a restricted one,
                 k[stack] the continuation of a stack
  stack    s ::= t . s | eN
  process  p ::= t * s | t            (a bare term runs against e0)
  formula  A ::= A -> A | A cap A | A cup A | Top | Bot | X(a, ..) | [F](a, ..)
               | forall x[^n]. A | forall2 X[/k]. A | ex x. A | ex2 X[/k]. A
               | a = b |> A | a = b | a != b | not(A) | and(A, A) | or(A, A)
               | iff(A, A) | nat(a) | bool(a) | gim(n, a) | (A)
                 forall x^n relativizes to gim(n, x); '->' is right associative
  fo-term  a ::= x | N | f(a, ..) | a + a | a * a | a | a | a & a | ~a | (a)
Gimel instructions: phi = #a0, chi = #a1, top = #b0, bot = #b1, gamma_i = #b(2+i).
Environment: LCR_DEPTH_CAP sets the default depth cap (12).
See FORMATS.md for derivation, rule, world and model files and JSONL records.)";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::size_t default_depth() {
    if (const char* v = std::getenv("LCR_DEPTH_CAP")) {
        try {
            return std::stoul(v);
        } catch (const std::exception&) {
            throw UsageError(std::string("LCR_DEPTH_CAP is not a number: ") + v);
        }
    }
    return 12;
}

std::string quote(const std::string& s) {
    if (!s.empty() && s.find_first_not_of("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789-_=./,") ==
                          std::string::npos)
        return s;
    std::string out = "'";
    for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return out + "'";
}

std::string replay_line(const std::vector<std::string>& args) {
    std::string out;
    for (const auto& a : args) out += (out.empty() ? "" : " ") + quote(a);
    return out;
}

json depth_json(const std::optional<std::size_t>& d) { return d ? json(*d) : json(nullptr); }

// -- rule configuration shared by pole-member, check and gimel --------------

struct RuleOptions {
    std::size_t gimel = 2;
    std::size_t indices = 0;
    bool fork = false;
    std::string rules_file;

    GimelConfig config() const {
        GimelConfig cfg = fork ? fork_preset() : gimel_preset(gimel, indices);
        if (fork && indices) {
            cfg.indices.clear();
            for (std::uint32_t i = 0; i < indices; ++i) cfg.indices.push_back(i);
        }
        return cfg;
    }
    RuleSet rules() const { return rules_file.empty() ? gimel_rules(config()) : load_rules(read_file(rules_file)); }

    void attach(CLI::App* cmd, bool allow_file = true) {
        cmd->add_option("--gimel", gimel, "gimel(n) rule set (default 2)")->check(CLI::PositiveNumber);
        cmd->add_option("--indices", indices, "size of the gamma index set I");
        cmd->add_flag("--fork", fork, "gimel(2) plus fork #a2 and must #a3");
        if (allow_file) cmd->add_option("--rules", rules_file, "rule configuration file (JSON), replaces --gimel");
    }
};

// -- run / step ---------------------------------------------------------------

int cmd_run(const std::string& text, const std::string& file, std::size_t fuel, bool jsonl) {
    Process p = parse_process(file.empty() ? text : read_file(file));
    Trace t = run(p, fuel);
    if (jsonl)
        write_trace_jsonl(std::cout, t);
    else
        write_trace_text(std::cout, t);
    return 0;
}

int cmd_step(const std::string& text, std::size_t per_step) {
    Process p = parse_process(text);
    std::size_t n = 0;
    std::cout << n << ": " << print(p) << std::endl;
    std::string line;
    while (true) {
        std::cout << "[enter: " << per_step << " step(s), N: N steps, q: quit] " << std::flush;
        if (!std::getline(std::cin, line) || line == "q") break;
        std::size_t count = per_step;
        if (!line.empty()) {
            try {
                count = std::stoul(line);
            } catch (const std::exception&) {
                std::cout << "expected a number or q\n";
                continue;
            }
        }
        for (std::size_t i = 0; i < count; ++i) {
            StepOutcome s = step(p);
            if (!s.stepped) {
                std::cout << "stuck (" << to_string(s.reason) << ")\n";
                return 0;
            }
            p = s.next;
            std::cout << ++n << ": " << to_string(s.rule) << " | " << print(p) << '\n';
        }
    }
    std::cout << '\n';
    return 0;
}

// -- smallest pole --------------------------------------------------------------

void print_justification(const Justification& j, int indent) {
    std::cout << std::string(indent * 2, ' ') << print(j.process) << "  [" << j.rule << ", level " << j.depth << "]\n";
    for (const auto& c : j.children) print_justification(c, indent + 1);
}

int cmd_pole_member(const std::string& text, const RuleOptions& ro, std::size_t depth, bool justify) {
    Process p = parse_process(text);
    RuleSet rules = ro.rules();
    PoleVerdict v = pole_membership(rules, p, depth, justify);
    std::cout << to_string(v) << '\n';
    if (justify && v.why) print_justification(*v.why, 1);
    return v.in ? 0 : 1;
}

int cmd_enumerate(const std::string& file, bool jsonl) {
    WorldSpec w = load_world(read_file(file));
    std::vector<Pole> poles = poles_of(w.rules, w.world);
    auto members = [&](Mask m) {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < w.world.size(); ++i)
            if (m >> i & 1) out.push_back(i);
        return out;
    };
    if (jsonl) {
        json procs = json::array();
        for (const auto& p : w.world.processes()) procs.push_back(print(p));
        std::cout << json{{"world", procs}}.dump() << '\n';
        for (const auto& p : poles) std::cout << json{{"pole", members(p.members)}}.dump() << '\n';
        return 0;
    }
    for (std::size_t i = 0; i < w.world.size(); ++i) std::cout << i << ": " << print(w.world.at(i)) << '\n';
    std::cout << poles.size() << " poles\n";
    for (const auto& p : poles) {
        std::cout << "{";
        bool first = true;
        for (auto i : members(p.members)) std::cout << (first ? "" : ", ") << i, first = false;
        std::cout << "}\n";
    }
    return 0;
}

// -- behaviour checks -----------------------------------------------------------

struct CheckArgs {
    std::string kind;
    std::string candidate;
    std::size_t n = 0;
    std::size_t k = 1;
    std::size_t samples = 50;
    std::size_t depth = 0;
    std::size_t conclusion_cap = 0;
    bool jsonl = false;
};

int emit_check(const CheckReport& r, const CheckArgs& a, const std::string& replay) {
    if (a.jsonl) {
        for (const auto& res : r.results) {
            json premises = json::array(), depths = json::array();
            for (const auto& p : res.instance.premises) premises.push_back(print(p));
            for (const auto& d : res.premise_depths) depths.push_back(depth_json(d));
            json rec{{"kind", r.kind},
                     {"candidate", r.candidate},
                     {"label", res.instance.label},
                     {"outcome", to_string(res.outcome)},
                     {"premises", premises},
                     {"premise_depths", depths},
                     {"conclusion", print(res.instance.conclusion)},
                     {"conclusion_depth", depth_json(res.conclusion_depth)},
                     {"detail", res.detail}};
            if (res.outcome == Outcome::Fail) rec["replay"] = replay;
            std::cout << rec.dump() << '\n';
        }
        std::cout << json{{"verdict", to_string(r.verdict())},
                          {"pass", r.count(Outcome::Pass)},
                          {"fail", r.count(Outcome::Fail)},
                          {"unknown", r.count(Outcome::Unknown)}}
                         .dump()
                  << '\n';
    } else {
        std::cout << r.table();
        std::cout << "verdict: " << to_string(r.verdict()) << '\n';
        if (r.verdict() == Outcome::Fail) std::cout << "replay: " << replay << '\n';
    }
    return r.verdict() == Outcome::Fail ? 1 : 0;
}

int cmd_check(const CheckArgs& a, const RuleOptions& ro, std::uint64_t seed, const std::string& replay) {
    GimelConfig cfg = ro.config();
    RuleSet rules = ro.rules();
    CheckOptions opts;
    opts.depth_cap = a.depth ? a.depth : default_depth();
    opts.conclusion_cap = a.conclusion_cap;
    std::mt19937_64 rng(seed);
    const Term top = cfg.top_term(), bot = cfg.bot_term();
    auto probes = default_term_probes(bot, top);
    auto stacks = default_stack_probes({true_t(), top});
    auto term_or = [&](const Term& dflt) { return a.candidate.empty() ? dflt : parse_term(a.candidate); };

    if (a.kind == "gimel-realizers")
        return emit_check(check_gimel_realizers(cfg, default_gimel_samples(cfg, a.samples, seed), opts), a, replay);
    if (a.kind == "voting") {
        std::size_t n = a.n ? a.n : cfg.n + 1;
        Term phi = term_or(cfg.phi_term());
        if (a.k == 1) {
            auto samples = agreeing_voting_samples(n, {bot, lam("x", bot) * omega_t()}, probes, stacks, a.samples, rng);
            return emit_check(check_voting(phi, n, rules, samples, opts), a, replay);
        }
        std::vector<BehaviorSample> samples;
        std::uniform_int_distribution<std::size_t> pick(0, probes.size() - 1), pick_s(0, stacks.size() - 1);
        for (std::size_t i = 0; i < a.samples; ++i) {
            BehaviorSample s;
            for (std::size_t j = 0; j < n; ++j) s.args.push_back(probes[pick(rng)]);
            s.pi = stacks[pick_s(rng)];
            samples.push_back(s);
        }
        return emit_check(check_behavior({Behavior::Voting, n, a.k}, phi, rules, samples, opts), a, replay);
    }
    if (a.kind == "fork" || a.kind == "must") {
        if (a.candidate.empty()) throw UsageError("check " + a.kind + " needs --candidate");
        std::vector<BehaviorSample> samples;
        for (const auto& u : probes)
            for (const auto& v : probes)
                for (const auto& pi : stacks) samples.push_back({{u, v}, pi, {}});
        return emit_check(check_behavior({parse_behavior(a.kind)}, parse_term(a.candidate), rules, samples, opts), a,
                          replay);
    }
    if (a.kind == "parallel-or" || a.kind == "gustave") {
        std::size_t arity = a.kind == "parallel-or" ? 2 : 3;
        Term c = term_or(por_r_t() * cfg.phi_term());
        std::vector<Term> fillers{true_t(), false_t()};
        if (arity == 2) fillers.push_back(omega_t());
        auto samples = boolean_samples(arity, fillers, {bot, top}, {Stack::bottom(0)});
        if (!a.conclusion_cap) opts.conclusion_cap = 40;
        return emit_check(check_behavior({parse_behavior(a.kind)}, c, rules, samples, opts), a, replay);
    }
    throw UsageError("unknown check kind '" + a.kind + "' (voting, fork, must, parallel-or, gustave, gimel-realizers)");
}

// -- derivations ------------------------------------------------------------------

std::vector<NamedModel> pick_models(const std::string& spec) {
    std::vector<NamedModel> out;
    if (spec.empty()) return out;
    for (auto& m : corpus_models())
        if (spec == "all" || spec == m.name) out.push_back(std::move(m));
    if (out.empty()) out.push_back({spec, load_model(read_file(spec))});
    return out;
}

int cmd_check_derivation(const std::string& file, const std::string& model, const std::vector<std::string>& hyps,
                         bool jsonl) {
    Derivation d = parse_derivation(read_file(file));
    auto rej = check_derivation(d);
    if (rej) {
        if (jsonl)
            std::cout << json{{"accepted", false}, {"rule", to_string(rej->rule)}, {"path", rej->path},
                              {"reason", rej->reason}}
                             .dump()
                      << '\n';
        else
            std::cout << "rejected: " << to_string(*rej) << '\n';
        return 1;
    }
    std::map<std::string, Term> realizers;
    for (const auto& h : hyps) {
        auto eqpos = h.find('=');
        if (eqpos == std::string::npos) throw UsageError("--hyp expects NAME=TERM");
        realizers[h.substr(0, eqpos)] = parse_term(h.substr(eqpos + 1));
    }
    if (!jsonl) {
        std::cout << "accepted: " << print(d.term) << " : " << print(d.formula) << '\n';
    }
    if (model.empty()) {
        if (jsonl) std::cout << json{{"accepted", true}, {"term", print(d.term)}, {"formula", print(d.formula)}}.dump() << '\n';
        return 0;
    }
    Term t = extract_realizer(d, realizers);
    GoldenDerivation g{file, d, realizers};
    int status = 0;
    for (const auto& m : pick_models(model)) {
        std::string why;
        bool ok = adequacy_in_model(m.model, g, &why);
        if (!ok) status = 1;
        if (jsonl)
            std::cout << json{{"accepted", true}, {"realizer", print(t)}, {"model", m.name},
                              {"poles", m.model.poles().size()}, {"realizes", ok}, {"detail", why}}
                             .dump()
                      << '\n';
        else
            std::cout << m.name << ": " << print(t) << (ok ? " realizes the conclusion in all " : " FAILS: ")
                      << (ok ? std::to_string(m.model.poles().size()) + " poles" : why) << '\n';
    }
    return status;
}

int cmd_realizes(const std::string& term, const std::string& formula, const std::string& model) {
    Term t = parse_term(term);
    Formula a = parse_formula(formula);
    check_formula(a);
    int status = 0;
    for (const auto& m : pick_models(model.empty() ? "all" : model)) {
        std::size_t ok = 0;
        for (std::size_t p = 0; p < m.model.poles().size(); ++p) ok += m.model.realizes(t, a, p);
        std::cout << m.name << ": realizes in " << ok << "/" << m.model.poles().size() << " poles\n";
        if (ok != m.model.poles().size()) status = 1;
    }
    return status;
}

int cmd_dump_corpus(const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& g : golden_derivations()) {
        std::ofstream out(std::filesystem::path(dir) / (g.name + ".sexp"));
        out << "; " << g.name << "\n";
        for (const auto& [x, t] : g.hyp_realizers) out << "; hyp " << x << " = " << print(t) << "\n";
        out << print_derivation(g.derivation) << "\n";
        std::cout << g.name << ".sexp\n";
    }
    return 0;
}

// -- verify -----------------------------------------------------------------------

int cmd_verify(const std::string& name, std::uint64_t seed, bool jsonl, const std::string& program) {
    std::vector<std::string> names;
    if (name == "all")
        names = suite_names();
    else if (has_suite(name))
        names = {name};
    else {
        std::string known;
        for (const auto& n : suite_names()) known += " " + n;
        throw UsageError("unknown suite '" + name + "'; suites:" + known + ", all");
    }
    int status = 0;
    for (const auto& n : names) {
        SuiteReport r = run_suite(n, seed);
        std::string replay = program + " verify " + n + " --seed " + std::to_string(seed);
        for (const auto& rec : r.records) {
            if (jsonl) {
                json j{{"suite", n}, {"check", rec.check}, {"outcome", to_string(rec.outcome)},
                       {"detail", rec.detail}, {"seed", seed}};
                if (rec.outcome == Outcome::Fail) j["replay"] = replay;
                std::cout << j.dump() << '\n';
            } else {
                std::cout << n << "  " << rec.check << "  " << to_string(rec.outcome) << "  " << rec.detail << '\n';
            }
        }
        if (!r.ok()) status = 1;
        if (!jsonl) {
            std::cout << n << ": " << r.count(Outcome::Pass) << " pass, " << r.count(Outcome::Fail) << " fail, "
                      << r.count(Outcome::Unknown) << " unknown (seed " << seed << ")\n";
            if (!r.ok()) std::cout << "replay: " << replay << '\n';
        }
    }
    return status;
}

// -- gimel content -----------------------------------------------------------------

std::string index_set(const std::vector<std::uint32_t>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + std::to_string(xs[i]);
    return out + "}";
}

// Without --indices, I covers the gammas of p and n more.
void with_default_indices(GimelConfig& cfg, const Process& p) {
    if (!cfg.indices.empty()) return;
    std::uint32_t top = 0;
    for (const auto& t : instructions_in(p))
        if (t.restricted() && t.index() >= cfg.gamma_base) top = std::max(top, t.index() - cfg.gamma_base + 1);
    for (std::uint32_t i = 0; i < top + cfg.n; ++i) cfg.indices.push_back(i);
}

int cmd_content(const std::string& text, const RuleOptions& ro, std::size_t radius) {
    Process p = parse_process(text);
    GimelConfig cfg = ro.config();
    with_default_indices(cfg, p);
    ContentSet c = content_r(p, radius, cfg);
    std::cout << "content of " << print(p) << " at r = " << radius << " over I = " << index_set(c.index_set) << ": "
              << c.members.size() << " members\n";
    for (Mask m : c.members) std::cout << "  " << index_set(c.indices_of(m)) << '\n';
    return 0;
}

int cmd_cover(const std::string& text, const RuleOptions& ro, std::size_t radius) {
    Process p = parse_process(text);
    GimelConfig cfg = ro.config();
    with_default_indices(cfg, p);
    if (!is_sound(p, cfg)) throw UsageError("cover-check needs a sound process (no bot)");
    CoverResult r = cover_check(p, radius, cfg);
    if (r.pass) {
        std::cout << "PASS: no " << cfg.n << " content members cover I at r = " << radius << '\n';
        return 0;
    }
    std::cout << "FAIL: covered by";
    for (const auto& w : r.witness) std::cout << ' ' << index_set(w);
    std::cout << '\n';
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classical realizability toolkit: lambda-c machine, smallest poles, finite models, checks"};
    app.footer(kGrammar);
    app.fallthrough();  // global options may follow the subcommand
    app.require_subcommand(1);
    std::uint64_t seed = kDefaultSeed;
    app.add_option("--seed", seed, "seed for sampled checks (default 1)");
    std::vector<std::string> args(argv, argv + argc);
    std::string program = "lcr";

    int status = 0;
    std::function<int()> action;

    std::string text, file;
    std::size_t fuel = 1000;
    bool jsonl = false;
    auto* run_cmd = app.add_subcommand("run", "run the machine on a process and print the trace");
    run_cmd->add_option("process", text, "process text");
    run_cmd->add_option("--file", file, "read the process from a file");
    run_cmd->add_option("--fuel", fuel, "maximum number of steps (default 1000)");
    run_cmd->add_flag("--jsonl", jsonl, "one JSON record per step");
    run_cmd->callback([&] {
        if (text.empty() && file.empty()) throw UsageError("run needs a process or --file");
        action = [&] { return cmd_run(text, file, fuel, jsonl); };
    });

    std::size_t per_step = 1;
    auto* step_cmd = app.add_subcommand("step", "step through a process interactively (reads commands from stdin)");
    step_cmd->add_option("process", text, "process text")->required();
    step_cmd->add_option("--fuel", per_step, "steps per enter (default 1)");
    step_cmd->callback([&] { action = [&] { return cmd_step(text, per_step); }; });

    RuleOptions ro;
    std::size_t depth = 0;
    bool justify = false;
    auto* pm = app.add_subcommand("pole-member", "search the smallest pole of a rule set for a process");
    pm->add_option("process", text, "process text")->required();
    ro.attach(pm);
    pm->add_option("--depth", depth, "depth cap (default LCR_DEPTH_CAP or 12)");
    pm->add_flag("--justify", justify, "print the justification tree");
    pm->callback([&] {
        action = [&] { return cmd_pole_member(text, ro, depth ? depth : default_depth(), justify); };
    });

    auto* en = app.add_subcommand("enumerate-poles", "list the poles of a finite world");
    en->add_option("world", file, "world file (JSON)")->required();
    en->add_flag("--jsonl", jsonl, "JSON records");
    en->callback([&] { action = [&] { return cmd_enumerate(file, jsonl); }; });

    CheckArgs ca;
    auto* ck = app.add_subcommand("check", "sampled behaviour check against the smallest pole");
    ck->add_option("kind", ca.kind, "voting | fork | must | parallel-or | gustave | gimel-realizers")->required();
    ck->add_option("--candidate", ca.candidate, "candidate term (defaults: phi, por-r phi)");
    ck->add_option("--n", ca.n, "voting arity (default gimel n + 1)");
    ck->add_option("--k", ca.k, "voting: size of the excluded set (default 1)");
    ck->add_option("--samples", ca.samples, "number of sampled instances (default 50)");
    ck->add_option("--depth", ca.depth, "premise depth cap (default LCR_DEPTH_CAP or 12)");
    ck->add_option("--conclusion-cap", ca.conclusion_cap, "conclusion depth cap (default depth + 2)");
    ck->add_flag("--jsonl", ca.jsonl, "one JSON record per instance");
    ro.attach(ck);
    ck->callback([&] {
        ca.jsonl = jsonl || ca.jsonl;
        action = [&] { return cmd_check(ca, ro, seed, replay_line(args)); };
    });

    std::string model;
    std::vector<std::string> hyps;
    auto* cd = app.add_subcommand("check-derivation", "check a derivation file, optionally realizes-check it");
    cd->add_option("file", file, "derivation file")->required();
    cd->add_option("--model", model, "pure | absorbing | control | all | model file (JSON)");
    cd->add_option("--hyp", hyps, "realizer for a hypothesis, NAME=TERM");
    cd->add_flag("--jsonl", jsonl, "JSON records");
    cd->callback([&] { action = [&] { return cmd_check_derivation(file, model, hyps, jsonl); }; });

    std::string formula;
    auto* rz = app.add_subcommand("realizes", "check a term against a closed formula in finite models");
    rz->add_option("term", text, "term")->required();
    rz->add_option("formula", formula, "closed formula")->required();
    rz->add_option("--model", model, "pure | absorbing | control | all (default) | model file (JSON)");
    rz->callback([&] { action = [&] { return cmd_realizes(text, formula, model); }; });

    std::string suite;
    auto* vf = app.add_subcommand("verify", "run a verification suite");
    vf->add_option("suite", suite, "suite name or all")->required();
    vf->add_flag("--jsonl", jsonl, "one JSON record per check");
    vf->footer("Suites: falsity-lemmas multieval determinism voting gimel-realizers consistency parallel-or adequacy nat");
    vf->callback([&] { action = [&] { return cmd_verify(suite, seed, jsonl, program); }; });

    std::size_t radius = 6;
    auto* gm = app.add_subcommand("gimel", "content analysis for the gimel construction");
    gm->require_subcommand(1);
    auto* gc = gm->add_subcommand("content", "content of a process: index sets K with p[K] in the pole");
    gc->add_option("process", text, "process text")->required();
    gc->add_option("--radius", radius, "stratification level r (default 6)");
    ro.attach(gc, false);
    gc->callback([&] { action = [&] { return cmd_content(text, ro, radius); }; });
    auto* gv = gm->add_subcommand("cover-check", "check that n content members never cover I");
    gv->add_option("process", text, "sound process text")->required();
    gv->add_option("--radius", radius, "stratification level r (default 6)");
    ro.attach(gv, false);
    gv->callback([&] { action = [&] { return cmd_cover(text, ro, radius); }; });
    auto* gmem = gm->add_subcommand("member", "same as pole-member with the gimel rules");
    gmem->add_option("process", text, "process text")->required();
    gmem->add_option("--depth", depth, "depth cap (default LCR_DEPTH_CAP or 12)");
    ro.attach(gmem, false);
    gmem->callback([&] {
        action = [&] { return cmd_pole_member(text, ro, depth ? depth : default_depth(), false); };
    });

    std::string dir;
    auto* dc = app.add_subcommand("dump-corpus", "write the golden derivations as .sexp files");
    dc->add_option("dir", dir, "output directory")->required();
    dc->callback([&] { action = [&] { return cmd_dump_corpus(dir); }; });

    try {
        app.parse(argc, argv);
        status = action ? action() : 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << kGrammar << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n\n" << kGrammar << '\n';
        return 2;
    } catch (const FormulaParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n\n" << kGrammar << '\n';
        return 2;
    } catch (const DerivationParseError& e) {
        std::cerr << "derivation parse error: " << e.what() << '\n';
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const LogicError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return status;
}
