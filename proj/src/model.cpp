#include "lcr/model.hpp"

#include <algorithm>
#include <json.hpp>
#include <unordered_set>

#include "json_rules.hpp"
#include "lcr/config.hpp"
#include "lcr/gimel.hpp"
#include "lcr/machine.hpp"

namespace lcr {

const StackSet& Table::at(const std::vector<std::uint64_t>& args) const {
    if (args.size() != arity) throw LogicError("table applied to the wrong number of arguments");
    std::size_t k = 0;
    for (auto v : args) {
        if (v >= domain)
            throw LogicError("table argument " + std::to_string(v) + " outside the table domain {0.." +
                             std::to_string(domain - 1) + "}; raise table_domain");
        k = k * domain + v;
    }
    return values.at(k);
}

FiniteModel::FiniteModel(std::vector<Term> terms, std::vector<Stack> stacks, RuleSet rules, ModelConfig cfg,
                         std::vector<Process> extra)
    : terms_(std::move(terms)), stacks_(std::move(stacks)), rules_(std::move(rules)), cfg_(cfg) {
    domain_ = cfg_.table_domain ? cfg_.table_domain : cfg_.individuals + 1;
    for (const auto& t : terms_)
        if (!t.closed()) throw LogicError("model terms must be closed");
    std::vector<Process> seeds;
    for (const auto& t : terms_)
        for (const auto& s : stacks_) seeds.push_back(t * s);
    seeds.insert(seeds.end(), extra.begin(), extra.end());
    world_ = FiniteWorld::close(seeds, rules_, cfg_.world_cap);
    poles_ = poles_of(rules_, world_);
}

void FiniteModel::set_poles(std::vector<Pole> poles) {
    for (const auto& p : poles)
        if (p.members & ~world_.full()) throw LogicError("pole mentions processes outside the world");
    poles_ = std::move(poles);
}

void FiniteModel::define_table(const std::string& name, Table table) {
    std::size_t expect = 1;
    for (std::size_t i = 0; i < table.arity; ++i) expect *= table.domain;
    if (table.values.size() != expect) throw LogicError("table " + name + " has the wrong number of entries");
    tables_[name] = std::move(table);
}

long FiniteModel::resolve(const Process& p) const {
    if (auto i = world_.index_of(p)) return static_cast<long>(*i);
    auto cached = resolved_.find(p);
    if (cached != resolved_.end()) return cached->second;

    std::vector<Process> path{p};
    std::unordered_set<Process, ProcessHash> seen{p};
    long answer = -1;
    Process cur = p;
    for (std::size_t fuel = 0;; ++fuel) {
        if (fuel >= cfg_.resolve_fuel)
            throw LogicError("world-escape: " + print(p) + " neither enters the world nor stops within the fuel");
        auto inst = rules_.instances(cur);
        StepOutcome o = step(cur);
        // an instance with no targets puts cur, hence the whole path, in every pole
        if (std::any_of(inst.begin(), inst.end(), [](const RuleInstance& r) { return r.targets.empty(); })) {
            answer = kEveryPole;
            break;
        }
        if (inst.size() > (o.stepped ? 1u : 0u))
            throw LogicError("world-escape: " + print(cur) + " needs a nondeterministic rule outside the world");
        if (!o.stepped) break;  // stuck outside the world
        cur = o.next;
        if (auto i = world_.index_of(cur)) {
            answer = static_cast<long>(*i);
            break;
        }
        if (auto c = resolved_.find(cur); c != resolved_.end()) {
            answer = c->second;
            break;
        }
        if (!seen.insert(cur).second) break;  // deterministic cycle
        path.push_back(cur);
    }
    for (const auto& q : path) resolved_[q] = answer;
    return answer;
}

bool FiniteModel::in_pole(const Process& p, std::size_t pole) const {
    long i = resolve(p);
    if (i == kEveryPole) return true;
    return i >= 0 && (poles_.at(pole).members >> i) & 1;
}

bool FiniteModel::holds_all(const Term& t, const StackSet& x, std::size_t pole) const {
    return std::all_of(x.begin(), x.end(), [&](const Stack& s) { return in_pole(t * s, pole); });
}

std::vector<Term> FiniteModel::dual(const StackSet& x, std::size_t pole) const {
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (holds_all(t, x, pole)) out.push_back(t);
    return out;
}

StackSet FiniteModel::eval(const Formula& a, std::size_t pole, Env& env) const {
    auto values = [&](const std::vector<FOTerm>& ts) {
        std::vector<std::uint64_t> v;
        for (const auto& t : ts) v.push_back(fo_value(t, env.fo));
        return v;
    };
    switch (a.kind()) {
        case FormulaKind::Top: return {};
        case FormulaKind::Bot: return {stacks_.begin(), stacks_.end()};
        case FormulaKind::Atom: {
            auto it = env.so.find(a.name());
            if (it == env.so.end()) throw LogicError("unbound predicate variable " + a.name());
            return it->second->at(values(a.args()));
        }
        case FormulaKind::Const: {
            auto it = tables_.find(a.name());
            if (it == tables_.end()) throw LogicError("unknown predicate constant " + a.name());
            return it->second.at(values(a.args()));
        }
        case FormulaKind::Imp: {
            StackSet lhs = eval(a.left(), pole, env);
            std::vector<Term> real;
            for (const auto& t : terms_)
                if (holds_all(t, lhs, pole)) real.push_back(t);
            StackSet rhs = eval(a.right(), pole, env);
            StackSet out;
            for (const auto& t : real)
                for (const auto& s : rhs) out.insert(Stack::cons(t, s));
            return out;
        }
        case FormulaKind::Forall1: {
            StackSet out;
            Env inner = env;
            for (std::uint64_t n = 0; n < cfg_.individuals; ++n) {
                inner.fo[a.name()] = n;
                StackSet part = eval(a.body(), pole, inner);
                out.insert(part.begin(), part.end());
            }
            return out;
        }
        case FormulaKind::Forall2: {
            std::size_t cells = 1;
            for (std::size_t i = 0; i < a.arity(); ++i) cells *= domain_;
            std::size_t bits = cells * stacks_.size();
            if (bits > cfg_.max_table_bits)
                throw LogicError("second-order quantifier over " + a.name() + " needs 2^" + std::to_string(bits) +
                                 " tables, above the configured bound 2^" + std::to_string(cfg_.max_table_bits));
            Table table{a.arity(), domain_, std::vector<StackSet>(cells)};
            Env inner = env;
            inner.so[a.name()] = &table;
            StackSet out;
            std::size_t m = stacks_.size();
            for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
                for (std::size_t c = 0; c < cells; ++c) {
                    table.values[c].clear();
                    for (std::size_t j = 0; j < m; ++j)
                        if ((code >> (c * m + j)) & 1) table.values[c].insert(stacks_[j]);
                }
                StackSet part = eval(a.body(), pole, inner);
                out.insert(part.begin(), part.end());
            }
            return out;
        }
        case FormulaKind::EqImp:
            if (fo_value(a.args()[0], env.fo) == fo_value(a.args()[1], env.fo)) return eval(a.body(), pole, env);
            return {};
        case FormulaKind::Cap: {
            StackSet l = eval(a.left(), pole, env), r = eval(a.right(), pole, env);
            l.insert(r.begin(), r.end());
            return l;
        }
        case FormulaKind::Cup: {
            StackSet l = eval(a.left(), pole, env), r = eval(a.right(), pole, env);
            StackSet out;
            std::set_intersection(l.begin(), l.end(), r.begin(), r.end(), std::inserter(out, out.end()));
            return out;
        }
    }
    return {};
}

StackSet FiniteModel::falsity(const Formula& a, std::size_t pole) const {
    if (!is_closed(a)) throw LogicError("falsity of an open formula: " + print(a));
    if (pole >= poles_.size()) throw LogicError("pole index out of range");
    Env env;
    return eval(a, pole, env);
}

std::vector<Term> FiniteModel::truth(const Formula& a, std::size_t pole) const { return dual(falsity(a, pole), pole); }

bool FiniteModel::realizes(const Term& t, const Formula& a, std::size_t pole) const {
    return holds_all(t, falsity(a, pole), pole);
}

bool FiniteModel::realizes_everywhere(const Term& t, const Formula& a) const {
    for (std::size_t i = 0; i < poles_.size(); ++i)
        if (!realizes(t, a, i)) return false;
    return true;
}

bool FiniteModel::sem_le(const Formula& a, const Formula& b) const {
    for (std::size_t i = 0; i < poles_.size(); ++i) {
        StackSet fa = falsity(a, i), fb = falsity(b, i);
        if (!std::includes(fa.begin(), fa.end(), fb.begin(), fb.end())) return false;
    }
    return true;
}

bool FiniteModel::sem_eq(const Formula& a, const Formula& b) const {
    for (std::size_t i = 0; i < poles_.size(); ++i)
        if (falsity(a, i) != falsity(b, i)) return false;
    return true;
}

FiniteModel load_model(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw LogicError(std::string("model file: ") + e.what());
    }
    try {
        ModelConfig cfg;
        cfg.individuals = j.value("individuals", cfg.individuals);
        cfg.table_domain = j.value("table_domain", cfg.table_domain);
        cfg.world_cap = j.value("world_cap", cfg.world_cap);
        std::vector<Term> terms;
        for (const auto& t : j.at("terms")) terms.push_back(parse_term(t.get<std::string>()));
        std::vector<Stack> stacks;
        for (const auto& s : j.at("stacks")) stacks.push_back(parse_stack(s.get<std::string>()));
        RuleSet rules = detail::rules_from_json(j);
        FiniteModel m(std::move(terms), stacks, std::move(rules), cfg);
        if (j.contains("tables"))
            for (const auto& [name, spec] : j["tables"].items()) {
                Table t;
                t.arity = spec.value("arity", std::size_t{0});
                t.domain = m.table_domain();
                for (const auto& cell : spec.at("values")) {
                    StackSet set;
                    for (const auto& k : cell) set.insert(stacks.at(k.get<std::size_t>()));
                    t.values.push_back(std::move(set));
                }
                m.define_table(name, std::move(t));
            }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw LogicError(std::string("model file: ") + e.what());
    } catch (const ConfigError& e) {
        throw LogicError(std::string("model file: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw LogicError(std::string("model file: stack index out of range"));
    }
}

}  // namespace lcr
