#include "lcr/multieval.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

#include "lcr/machine.hpp"

namespace lcr {

// -- RuleSet ------------------------------------------------------------------

RuleSet& RuleSet::add(std::string name, Fire fire) {
    schemas_.push_back({std::move(name), std::move(fire)});
    return *this;
}

namespace {

std::vector<Process> dedupe(std::vector<Process> ps) {
    std::vector<Process> out;
    for (auto& p : ps)
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    return out;
}

}  // namespace

std::vector<RuleInstance> RuleSet::instances(const Process& p) const {
    std::vector<RuleInstance> out;
    StepOutcome o = step(p);
    if (o.stepped) out.push_back({to_string(o.rule), {o.next}});
    for (const auto& s : schemas_)
        for (auto& targets : s.fire(p)) out.push_back({s.name, dedupe(std::move(targets))});
    return out;
}

std::vector<std::string> RuleSet::names() const {
    std::vector<std::string> out;
    for (const auto& s : schemas_) out.push_back(s.name);
    return out;
}

namespace {

/// Splits the first `n` stack elements off; false if the stack is shorter.
bool pop_args(const Stack& s, std::size_t n, std::vector<Term>& args, Stack& rest) {
    Stack cur = s;
    args.clear();
    for (std::size_t i = 0; i < n; ++i) {
        if (cur.is_bottom()) return false;
        args.push_back(cur.head());
        cur = cur.tail();
    }
    rest = cur;
    return true;
}

void subsets_of_size(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
                     std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < n; ++i) {
        cur.push_back(i);
        subsets_of_size(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

RuleSet::Fire voting_schema(Term instr, std::size_t arity, std::size_t excluded) {
    std::vector<std::vector<std::size_t>> drops;
    std::vector<std::size_t> cur;
    subsets_of_size(arity, excluded, 0, cur, drops);
    return [instr = std::move(instr), arity, drops](const Process& p) {
        std::vector<std::vector<Process>> out;
        if (p.head != instr) return out;
        std::vector<Term> args;
        Stack rest;
        if (!pop_args(p.stack, arity, args, rest)) return out;
        for (const auto& drop : drops) {
            std::vector<Process> targets;
            for (std::size_t i = 0; i < arity; ++i)
                if (std::find(drop.begin(), drop.end(), i) == drop.end()) targets.push_back(Process{args[i], rest});
            out.push_back(std::move(targets));
        }
        return out;
    };
}

RuleSet::Fire must_schema(Term instr) {
    return [instr = std::move(instr)](const Process& p) {
        std::vector<std::vector<Process>> out;
        std::vector<Term> args;
        Stack rest;
        if (p.head == instr && pop_args(p.stack, 2, args, rest))
            out.push_back({Process{args[0], rest}, Process{args[1], rest}});
        return out;
    };
}

RuleSet::Fire absorb_schema(Term instr) {
    return [instr = std::move(instr)](const Process& p) {
        std::vector<std::vector<Process>> out;
        if (p.head == instr) out.push_back({});
        return out;
    };
}

// -- FiniteWorld --------------------------------------------------------------

FiniteWorld::FiniteWorld(std::vector<Process> processes) {
    for (auto& p : processes) {
        if (index_.count(p)) continue;
        index_.emplace(p, processes_.size());
        processes_.push_back(std::move(p));
    }
}

FiniteWorld FiniteWorld::close(const std::vector<Process>& seeds, const RuleSet& rules, std::size_t cap) {
    std::vector<Process> found;
    std::unordered_map<Process, std::size_t, ProcessHash> seen;
    std::deque<Process> work;
    auto visit = [&](const Process& p) {
        if (seen.count(p)) return;
        if (found.size() >= cap)
            throw WorldTooLarge("world closure exceeds " + std::to_string(cap) + " processes");
        seen.emplace(p, found.size());
        found.push_back(p);
        work.push_back(p);
    };
    for (const auto& s : seeds) visit(s);
    while (!work.empty()) {
        Process p = work.front();
        work.pop_front();
        for (const auto& inst : rules.instances(p))
            for (const auto& q : inst.targets) visit(q);
    }
    FiniteWorld w(std::move(found));
    w.validated_ = true;
    return w;
}

bool FiniteWorld::validate(const RuleSet& rules, std::string* why) {
    for (const auto& p : processes_)
        for (const auto& inst : rules.instances(p))
            for (const auto& q : inst.targets)
                if (!index_.count(q)) {
                    if (why) *why = "rule " + inst.rule + " leads from " + print(p) + " to " + print(q) + " outside the world";
                    validated_ = false;
                    return false;
                }
    validated_ = true;
    return true;
}

std::optional<std::size_t> FiniteWorld::index_of(const Process& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Mask FiniteWorld::mask_of(const std::vector<Process>& ps) const {
    Mask m = 0;
    for (const auto& p : ps) {
        auto i = index_of(p);
        if (!i) throw std::out_of_range("process outside the world: " + print(p));
        m |= Mask{1} << *i;
    }
    return m;
}

// -- FiniteRelation -------------------------------------------------------------

FiniteRelation::FiniteRelation(std::size_t n) : n_(n) {
    if (n > kMaxProcesses)
        throw WorldTooLarge("explicit relations support at most " + std::to_string(kMaxProcesses) + " processes");
    bits_.assign(std::size_t{1} << (2 * n), 0);
}

std::size_t FiniteRelation::count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<std::pair<Mask, Mask>> FiniteRelation::pairs() const {
    std::vector<std::pair<Mask, Mask>> out;
    Mask low = (Mask{1} << n_) - 1;
    for (std::size_t k = 0; k < bits_.size(); ++k)
        if (bits_[k]) out.emplace_back(Mask(k) & low, Mask(k) >> n_);
    return out;
}

namespace {

// OR each entry into all of its supersets (over the 2n-bit pair index).
void upward_closure(std::vector<std::uint8_t>& bits, std::size_t total_bits) {
    std::size_t size = bits.size();
    for (std::size_t b = 0; b < total_bits; ++b) {
        std::size_t bit = std::size_t{1} << b;
        for (std::size_t k = 0; k < size; ++k)
            if (!(k & bit) && bits[k]) bits[k | bit] = 1;
    }
}

// OR each entry into all of its subsets.
void downward_closure(std::vector<std::uint8_t>& bits, std::size_t total_bits) {
    std::size_t size = bits.size();
    for (std::size_t b = 0; b < total_bits; ++b) {
        std::size_t bit = std::size_t{1} << b;
        for (std::size_t k = 0; k < size; ++k)
            if ((k & bit) && bits[k]) bits[k ^ bit] = 1;
    }
}

Mask single(std::size_t i) { return Mask{1} << i; }

void require_validated(const FiniteWorld& world) {
    if (!world.validated()) throw std::logic_error("world-not-validated");
}

}  // namespace

FiniteRelation relation_of_rules(const RuleSet& rules, const FiniteWorld& world) {
    FiniteRelation rel(world.size());
    for (std::size_t i = 0; i < world.size(); ++i)
        for (const auto& inst : rules.instances(world.at(i))) rel.insert(single(i), world.mask_of(inst.targets));
    return rel;
}

const char* to_string(AxiomViolation::Kind k) {
    switch (k) {
        case AxiomViolation::Kind::DeterministicEmbedding: return "deterministic-embedding";
        case AxiomViolation::Kind::Identity: return "identity";
        case AxiomViolation::Kind::Cut: return "cut";
        case AxiomViolation::Kind::Weakening: return "weakening";
    }
    return "?";
}

AxiomReport check_axioms(const FiniteRelation& rel, const FiniteWorld& world) {
    require_validated(world);
    const std::size_t n = world.size();
    if (rel.world_size() != n) throw std::invalid_argument("relation and world sizes differ");
    if (n > 6) throw WorldTooLarge("check_axioms is exhaustive and limited to 6 processes");

    AxiomReport report;
    auto miss = [&](AxiomViolation::Kind k, Mask p, Mask q, std::string detail = {}) {
        report.violations.push_back({k, p, q, std::move(detail)});
    };
    for (std::size_t i = 0; i < n; ++i) {
        StepOutcome o = step(world.at(i));
        if (o.stepped) {
            Mask q = world.mask_of({o.next});
            if (!rel.contains(single(i), q)) miss(AxiomViolation::Kind::DeterministicEmbedding, single(i), q);
        }
        if (!rel.contains(single(i), single(i))) miss(AxiomViolation::Kind::Identity, single(i), single(i));
    }
    auto pairs = rel.pairs();
    for (auto [p, q] : pairs)
        for (std::size_t e = 0; e < n; ++e) {
            if (!(p & single(e)) && !rel.contains(p | single(e), q))
                miss(AxiomViolation::Kind::Weakening, p | single(e), q);
            if (!(q & single(e)) && !rel.contains(p, q | single(e)))
                miss(AxiomViolation::Kind::Weakening, p, q | single(e));
        }
    std::set<std::pair<Mask, Mask>> reported;
    for (auto [p, qr] : pairs)
        for (auto [pr, q2] : pairs) {
            Mask common = qr & pr;
            while (common) {
                std::size_t r = static_cast<std::size_t>(std::countr_zero(common));
                common &= common - 1;
                for (Mask q : {qr & ~single(r), qr})
                    for (Mask p2 : {pr & ~single(r), pr}) {
                        Mask cp = p | p2, cq = q | q2;
                        if (!rel.contains(cp, cq) && reported.insert({cp, cq}).second)
                            miss(AxiomViolation::Kind::Cut, cp, cq, "cut on process " + std::to_string(r));
                    }
            }
        }
    return report;
}

FiniteRelation closure(const FiniteRelation& seed, const FiniteWorld& world) {
    require_validated(world);
    const std::size_t n = world.size();
    if (seed.world_size() != n) throw std::invalid_argument("relation and world sizes differ");

    struct Gen {
        Mask p, q;
        bool alive;
    };
    std::vector<Gen> gens;
    std::deque<std::size_t> work;
    auto dominates = [](const Gen& a, Mask p, Mask q) { return (a.p & ~p) == 0 && (a.q & ~q) == 0; };
    auto add = [&](Mask p, Mask q) {
        for (const auto& g : gens)
            if (g.alive && dominates(g, p, q)) return;
        for (auto& g : gens)
            if (g.alive && (p & ~g.p) == 0 && (q & ~g.q) == 0) g.alive = false;
        gens.push_back({p, q, true});
        work.push_back(gens.size() - 1);
    };

    for (std::size_t i = 0; i < n; ++i) {
        add(single(i), single(i));
        StepOutcome o = step(world.at(i));
        if (o.stepped) add(single(i), world.mask_of({o.next}));
    }
    for (auto [p, q] : seed.pairs()) add(p, q);

    auto cut = [&](const Gen& g, const Gen& h) {
        Mask common = g.q & h.p;
        while (common) {
            Mask r = common & (~common + 1);
            common &= common - 1;
            add(g.p | (h.p & ~r), (g.q & ~r) | h.q);
        }
    };
    while (!work.empty()) {
        std::size_t gi = work.front();
        work.pop_front();
        for (std::size_t hi = 0; hi < gens.size(); ++hi) {
            if (!gens[gi].alive) break;
            if (!gens[hi].alive) continue;
            Gen g = gens[gi], h = gens[hi];
            cut(g, h);
            if (hi != gi) cut(h, g);
        }
    }

    FiniteRelation out(n);
    for (const auto& g : gens)
        if (g.alive) out.insert(g.p, g.q);
    upward_closure(out.raw(), 2 * n);
    return out;
}

std::vector<Pole> poles_of(const RuleSet& rules, const FiniteWorld& world) {
    require_validated(world);
    if (world.size() > kMaxPoleEnumeration)
        throw WorldTooLarge("pole enumeration is limited to " + std::to_string(kMaxPoleEnumeration) + " processes");
    std::vector<std::pair<Mask, Mask>> inst;
    for (std::size_t i = 0; i < world.size(); ++i)
        for (const auto& r : rules.instances(world.at(i))) inst.emplace_back(single(i), world.mask_of(r.targets));
    std::vector<Pole> out;
    for (Mask s = 0; s <= world.full(); ++s) {
        bool ok = std::all_of(inst.begin(), inst.end(),
                              [&](const auto& pq) { return (pq.second & ~s) != 0 || (pq.first & s) != 0; });
        if (ok) out.push_back({s});
    }
    return out;
}

std::vector<Pole> poles_of(const FiniteRelation& rel, const FiniteWorld& world) {
    const std::size_t n = world.size();
    if (rel.world_size() != n) throw std::invalid_argument("relation and world sizes differ");
    if (n > kMaxPoleEnumeration) throw WorldTooLarge("pole enumeration is limited");
    // up[A,B]: some pair (P,Q) of the relation has P in A and Q in B.
    std::vector<std::uint8_t> up = rel.raw();
    upward_closure(up, 2 * n);
    std::vector<Pole> out;
    Mask full = world.full();
    for (Mask s = 0; s <= full; ++s) {
        std::size_t k = static_cast<std::size_t>((full & ~s) | (s << n));
        if (!up[k]) out.push_back({s});
    }
    return out;
}

FiniteRelation relation_of(const std::vector<Pole>& structure, const FiniteWorld& world) {
    const std::size_t n = world.size();
    FiniteRelation rel(n);
    Mask full = world.full();
    // bad[P,Q]: some pole contains Q and misses P.
    std::vector<std::uint8_t> bad(rel.raw().size(), 0);
    for (const auto& pole : structure) {
        if (pole.members & ~full) throw std::invalid_argument("pole mentions processes outside the world");
        bad[static_cast<std::size_t>((full & ~pole.members) | (pole.members << n))] = 1;
    }
    downward_closure(bad, 2 * n);
    auto& bits = rel.raw();
    for (std::size_t k = 0; k < bits.size(); ++k) bits[k] = bad[k] ? 0 : 1;
    return rel;
}

// -- smallest pole ------------------------------------------------------------

std::string to_string(const PoleVerdict& v) {
    return (v.in ? "IN " : "UNKNOWN ") + std::to_string(v.depth);
}

PoleSearch::Entry& PoleSearch::entry(const Process& p) {
    Entry& e = memo_[p];
    if (!e.instances_ready) {
        e.instances = rules_.instances(p);
        e.instances_ready = true;
    }
    return e;
}

std::optional<std::size_t> PoleSearch::depth(const Process& p, std::size_t cap) {
    Entry& e = entry(p);
    if (e.exact) {
        if (*e.exact <= cap) return e.exact;
        return std::nullopt;
    }
    if (cap <= e.fails_upto) return std::nullopt;

    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < e.instances.size(); ++k) {
        const auto& targets = e.instances[k].targets;
        std::size_t worst = 0;
        bool ok = true;
        if (best && *best < 2) break;
        std::size_t budget = best ? *best - 2 : cap - 1;  // only strictly better instances matter
        for (const auto& q : targets) {
            auto d = depth(q, budget);
            if (!d) {
                ok = false;
                break;
            }
            worst = std::max(worst, *d);
        }
        if (ok) best = worst + 1;
    }
    if (best)
        e.exact = best;
    else
        e.fails_upto = cap;
    return best;
}

Justification PoleSearch::justify(const Process& p, std::size_t d) {
    auto exact = depth(p, d);
    if (!exact) throw std::logic_error("justify called on a process outside the level");
    Entry& e = entry(p);
    for (const auto& inst : e.instances) {
        bool ok = true;
        for (const auto& q : inst.targets)
            if (!depth(q, *exact - 1)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        Justification j{p, inst.rule, *exact, {}};
        for (const auto& q : inst.targets) j.children.push_back(justify(q, *exact - 1));
        return j;
    }
    throw std::logic_error("no justifying instance found");
}

PoleVerdict PoleSearch::verdict(const Process& p, std::size_t cap, bool with_justification) {
    PoleVerdict v;
    auto d = depth(p, cap);
    v.in = d.has_value();
    v.depth = d ? *d : cap;
    if (d && with_justification) v.why = std::make_shared<Justification>(justify(p, *d));
    return v;
}

PoleVerdict pole_membership(const RuleSet& rules, const Process& p, std::size_t depth_cap, bool with_justification) {
    PoleSearch search(rules);
    return search.verdict(p, depth_cap, with_justification);
}

bool replay(const Justification& j, const RuleSet& rules, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg + " at " + print(j.process);
        return false;
    };
    if (j.depth == 0) return fail("node at depth 0");
    std::vector<Process> kids;
    for (const auto& c : j.children) {
        if (c.depth >= j.depth) return fail("child depth does not decrease");
        kids.push_back(c.process);
    }
    bool matched = false;
    for (const auto& inst : rules.instances(j.process)) {
        if (inst.rule != j.rule || inst.targets.size() != kids.size()) continue;
        if (std::all_of(kids.begin(), kids.end(), [&](const Process& k) {
                return std::find(inst.targets.begin(), inst.targets.end(), k) != inst.targets.end();
            })) {
            matched = true;
            break;
        }
    }
    if (!matched) return fail("no rule instance matches");
    for (const auto& c : j.children)
        if (!replay(c, rules, why)) return false;
    return true;
}

}  // namespace lcr
