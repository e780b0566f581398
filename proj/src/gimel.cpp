#include "lcr/gimel.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace lcr {

void GimelConfig::validate() const {
    if (n == 0) throw std::invalid_argument("gimel: n must be positive");
    if (phi == chi) throw std::invalid_argument("gimel: phi and chi share an instruction");
    for (auto extra : {fork, must})
        if (extra && (*extra == phi || *extra == chi))
            throw std::invalid_argument("gimel: fork/must collide with phi or chi");
    if (fork && must && *fork == *must) throw std::invalid_argument("gimel: fork and must share an instruction");
    if (top == bot) throw std::invalid_argument("gimel: top and bot share an instruction");
    std::set<std::uint32_t> seen;
    for (auto i : indices) {
        if (!seen.insert(i).second) throw std::invalid_argument("gimel: repeated index in I");
        std::uint32_t code = gamma_base + i;
        if (code == top || code == bot) throw std::invalid_argument("gimel: gamma index collides with top or bot");
    }
}

GimelConfig gimel_preset(std::size_t n, std::size_t index_count) {
    GimelConfig cfg;
    cfg.n = n;
    for (std::uint32_t i = 0; i < index_count; ++i) cfg.indices.push_back(i);
    cfg.validate();
    return cfg;
}

GimelConfig fork_preset() {
    GimelConfig cfg = gimel_preset(2);
    cfg.fork = 2;
    cfg.must = 3;
    cfg.validate();
    return cfg;
}

RuleSet gimel_rules(const GimelConfig& cfg) {
    cfg.validate();
    RuleSet rules;
    rules.add("phi", voting_schema(cfg.phi_term(), cfg.n + 1, 1));
    Term chi = cfg.chi_term(), top = cfg.top_term(), bot = cfg.bot_term();
    std::size_t n = cfg.n;
    rules.add("chi", [chi, top, bot, n](const Process& p) {
        std::vector<std::vector<Process>> out;
        if (p.head != chi || p.stack.is_bottom()) return out;
        Term u = p.stack.head();
        const Stack& rest = p.stack.tail();
        std::vector<Process> targets;
        for (std::size_t k = 1; k <= n; ++k) {
            std::vector<Term> bits;
            for (std::size_t i = 1; i <= n; ++i) bits.push_back(i == k ? top : bot);
            targets.push_back(u * push_all(bits, rest));
        }
        out.push_back(std::move(targets));
        return out;
    });
    rules.add("bot", absorb_schema(bot));
    if (cfg.fork) rules.add("fork", voting_schema(nonrestricted(*cfg.fork), 2, 1));
    if (cfg.must) rules.add("must", must_schema(nonrestricted(*cfg.must)));
    return rules;
}

namespace {

std::optional<std::uint32_t> gamma_of(const Term& instr, const GimelConfig& cfg) {
    if (!instr.restricted() || instr.index() == cfg.top || instr.index() == cfg.bot) return std::nullopt;
    if (instr.index() < cfg.gamma_base)
        throw std::invalid_argument("restricted instruction #b" + std::to_string(instr.index()) +
                                    " is neither top, bot nor a gamma");
    std::uint32_t i = instr.index() - cfg.gamma_base;
    if (std::find(cfg.indices.begin(), cfg.indices.end(), i) == cfg.indices.end())
        throw std::invalid_argument("gamma index " + std::to_string(i) + " is not declared in I");
    return i;
}

}  // namespace

Process replace_K(const Process& p, const std::vector<std::uint32_t>& K, const GimelConfig& cfg) {
    for (auto k : K)
        if (std::find(cfg.indices.begin(), cfg.indices.end(), k) == cfg.indices.end())
            throw std::invalid_argument("K is not a subset of I");
    return map_instructions(p, [&](const Term& instr) {
        auto g = gamma_of(instr, cfg);
        if (!g) return instr;
        return std::find(K.begin(), K.end(), *g) != K.end() ? cfg.top_term() : cfg.bot_term();
    });
}

std::vector<std::uint32_t> gamma_indices(const Process& p, const GimelConfig& cfg) {
    std::vector<std::uint32_t> out;
    for (const auto& instr : instructions_in(p))
        if (auto g = gamma_of(instr, cfg)) out.push_back(*g);
    std::sort(out.begin(), out.end());
    return out;
}

bool ContentSet::contains(Mask k) const { return std::binary_search(members.begin(), members.end(), k); }

std::vector<std::uint32_t> ContentSet::indices_of(Mask k) const {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < index_set.size(); ++i)
        if (k & (Mask{1} << i)) out.push_back(index_set[i]);
    return out;
}

ContentSet content_r(const Process& p, std::size_t r, const GimelConfig& cfg, PoleSearch& search) {
    gamma_indices(p, cfg);  // rejects undeclared gammas up front
    if (cfg.indices.size() > kMaxContentIndices)
        throw std::invalid_argument("content: index set larger than " + std::to_string(kMaxContentIndices));
    ContentSet c;
    c.process = p;
    c.radius = r;
    c.index_set = cfg.indices;
    Mask count = Mask{1} << cfg.indices.size();
    for (Mask k = 0; k < count; ++k)
        if (search.depth(replace_K(p, c.indices_of(k), cfg), r)) c.members.push_back(k);
    return c;
}

ContentSet content_r(const Process& p, std::size_t r, const GimelConfig& cfg) {
    RuleSet rules = gimel_rules(cfg);
    PoleSearch search(rules);
    return content_r(p, r, cfg, search);
}

bool is_sound(const Process& p, const GimelConfig& cfg) {
    return !contains_instr(p.head, true, cfg.bot) && !contains_instr(p.stack, true, cfg.bot);
}

namespace {

bool find_cover(const std::vector<Mask>& maximal, Mask full, std::size_t left, Mask acc, std::size_t from,
                std::vector<Mask>& chosen) {
    if (acc == full) return true;
    if (left == 0) return false;
    for (std::size_t i = from; i < maximal.size(); ++i) {
        chosen.push_back(maximal[i]);
        if (find_cover(maximal, full, left - 1, acc | maximal[i], i, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

CoverResult cover_check(const Process& p, std::size_t r, const GimelConfig& cfg) {
    if (!is_sound(p, cfg)) throw std::invalid_argument("cover_check: process mentions bot");
    auto occurring = gamma_indices(p, cfg);
    if (cfg.indices.size() < occurring.size() + cfg.n)
        throw std::invalid_argument("cover_check: I needs " + std::to_string(cfg.n) +
                                    " indices beyond those occurring in the process");
    ContentSet c = content_r(p, r, cfg);
    // Unions only grow when members grow, so maximal members suffice.
    std::vector<Mask> maximal;
    for (Mask m : c.members)
        if (std::none_of(c.members.begin(), c.members.end(), [&](Mask o) { return o != m && (m & ~o) == 0; }))
            maximal.push_back(m);
    CoverResult res;
    res.radius = r;
    std::vector<Mask> chosen;
    Mask full = (Mask{1} << c.index_set.size()) - 1;
    if (find_cover(maximal, full, cfg.n, 0, 0, chosen)) {
        res.pass = false;
        for (Mask m : chosen) res.witness.push_back(c.indices_of(m));
        while (res.witness.size() < cfg.n) res.witness.push_back(res.witness.back());
    }
    return res;
}

std::vector<Mask> antitonicity_violations(const ContentSet& c) {
    std::vector<Mask> out;
    Mask count = Mask{1} << c.index_set.size();
    for (Mask k = 0; k < count; ++k) {
        if (c.contains(k)) continue;
        if (std::any_of(c.members.begin(), c.members.end(), [&](Mask l) { return (k & ~l) == 0; })) out.push_back(k);
    }
    return out;
}

}  // namespace lcr
