#include <random>

#include "lcr/gimel.hpp"
#include "lcr/nondet.hpp"

namespace lcr {

GimelSamples default_gimel_samples(const GimelConfig& cfg, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    GimelSamples s;
    Term bot = cfg.bot_term(), top = cfg.top_term();
    s.stacks = default_stack_probes({true_t(), false_t(), top});
    auto probes = default_term_probes(bot, top);
    std::vector<Term> bot_headed{bot, bot * top, lam("x", bot) * omega_t()};
    for (const auto& v : agreeing_voting_samples(cfg.n + 1, bot_headed, probes, s.stacks, count, rng)) {
        s.phi_args.push_back(v.args);
        s.phi_excluded.push_back(v.j);
    }
    std::vector<std::string> xs;
    for (std::size_t i = 1; i <= cfg.n; ++i) xs.push_back("x" + std::to_string(i));
    s.chi_args = {lams(xs, bot), lams(xs, bot * top)};
    return s;
}

CheckReport check_gimel_realizers(const GimelConfig& cfg, const GimelSamples& samples, const CheckOptions& opts) {
    cfg.validate();
    RuleSet rules = gimel_rules(cfg);
    PoleSearch search(rules);
    CheckReport rep;
    rep.kind = "gimel(" + std::to_string(cfg.n) + ") realizers";
    rep.candidate = "bot, phi, chi";
    rep.options = opts;

    for (const auto& pi : samples.stacks) {
        InstanceResult r = check_instance({"bot", {}, cfg.bot_term() * pi}, search, opts);
        if (r.outcome == Outcome::Pass && r.conclusion_depth != std::size_t{1}) {
            r.outcome = Outcome::Fail;
            r.detail = "bot * pi must be in at depth 1";
        }
        rep.results.push_back(r);
    }

    if (samples.phi_args.size() != samples.phi_excluded.size())
        throw std::invalid_argument("phi samples and excluded indices differ in length");
    std::vector<VotingSample> votes;
    for (std::size_t i = 0; i < samples.phi_args.size(); ++i)
        for (const auto& pi : samples.stacks) votes.push_back({samples.phi_args[i], pi, samples.phi_excluded[i]});
    for (auto r : check_voting(cfg.phi_term(), cfg.n + 1, rules, votes, opts).results) {
        r.instance.label = "phi " + r.instance.label;
        rep.results.push_back(r);
    }

    for (const auto& u : samples.chi_args)
        for (const auto& pi : samples.stacks) {
            Instance inst;
            inst.label = "chi";
            inst.conclusion = cfg.chi_term() * Stack::cons(u, pi);
            for (std::size_t k = 1; k <= cfg.n; ++k) {
                std::vector<Term> bs;
                for (std::size_t i = 1; i <= cfg.n; ++i) bs.push_back(i == k ? cfg.top_term() : cfg.bot_term());
                inst.premises.push_back(u * push_all(bs, pi));
            }
            rep.results.push_back(check_instance(inst, search, opts));
        }
    return rep;
}

}  // namespace lcr
