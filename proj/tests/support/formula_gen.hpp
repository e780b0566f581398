#pragma once

// Random formulas for the logic property tests, plus a classical evaluator
// for arithmetic sentences over a bounded range of individuals.

#include <random>

#include "lcr/logic.hpp"

namespace lcr::testing {

inline FOTerm random_fo(std::mt19937_64& rng, const std::vector<std::string>& vars, int depth) {
    int k = static_cast<int>(rng() % (depth > 0 ? 9 : 4));
    if (k == 0 || (k == 1 && vars.empty())) return FOTerm::numeral(rng() % 3);
    if (k == 1) return FOTerm::variable(vars[rng() % vars.size()]);
    if (k == 2) return FOTerm::numeral(rng() % 2);
    if (k == 3) {
        if (vars.empty()) return FOTerm::numeral(1);
        return FOTerm::apply("s", {FOTerm::variable(vars[rng() % vars.size()])});
    }
    static const char* bin[] = {"min", "max", "|", "&"};
    if (k < 8) return FOTerm::apply(bin[k - 4], {random_fo(rng, vars, depth - 1), random_fo(rng, vars, depth - 1)});
    return FOTerm::apply("~", {random_fo(rng, vars, depth - 1)});
}

/// Arithmetic sentence: equations, |>, ->, forall x, Top, Bot, and/or.
inline Formula random_arith(std::mt19937_64& rng, std::vector<std::string>& vars, int depth) {
    int k = static_cast<int>(rng() % (depth > 0 ? 9 : 4));
    switch (k) {
        case 0: return Formula::top();
        case 1: return Formula::bot();
        case 2: return eq(random_fo(rng, vars, 1), random_fo(rng, vars, 1));
        case 3: return neq(random_fo(rng, vars, 1), random_fo(rng, vars, 1));
        case 4: return Formula::imp(random_arith(rng, vars, depth - 1), random_arith(rng, vars, depth - 1));
        case 5: {
            std::string x = "x" + std::to_string(vars.size());
            vars.push_back(x);
            Formula body = random_arith(rng, vars, depth - 1);
            vars.pop_back();
            return Formula::forall(x, body);
        }
        case 6:
            return Formula::eq_imp(random_fo(rng, vars, 1), random_fo(rng, vars, 1), random_arith(rng, vars, depth - 1));
        case 7: return conj(random_arith(rng, vars, depth - 1), random_arith(rng, vars, depth - 1));
        default: return disj(random_arith(rng, vars, depth - 1), random_arith(rng, vars, depth - 1));
    }
}

/// Any formula shape, for printing round trips.
inline Formula random_formula(std::mt19937_64& rng, int depth) {
    std::vector<std::string> vars{"x", "y"};
    int k = static_cast<int>(rng() % (depth > 0 ? 10 : 4));
    switch (k) {
        case 0: return Formula::top();
        case 1: return Formula::bot();
        case 2: return Formula::atom("X", {random_fo(rng, vars, 2)});
        case 3: return Formula::constant("F", {random_fo(rng, vars, 2), random_fo(rng, vars, 1)});
        case 4: return Formula::imp(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
        case 5: return Formula::cap(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
        case 6: return Formula::cup(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
        case 7: return Formula::forall(rng() & 1 ? "x" : "z", random_formula(rng, depth - 1));
        case 8: return Formula::forall2(rng() & 1 ? "X" : "Y", rng() % 2, random_formula(rng, depth - 1));
        default:
            return Formula::eq_imp(random_fo(rng, vars, 2), random_fo(rng, vars, 2), random_formula(rng, depth - 1));
    }
}

/// Classical truth with individuals {0..n-1}. Leibniz equality is read as
/// equality of values: a second-order atom Z(a) -> Z(b) under forall2 Z/1 is
/// only ever produced by `eq`, which this evaluator recognizes.
inline bool classical(const Formula& a, std::uint64_t n, std::map<std::string, std::uint64_t>& env);

namespace detail {

inline bool is_leibniz(const Formula& a) {
    return a.kind() == FormulaKind::Forall2 && a.arity() == 1 && a.body().kind() == FormulaKind::Imp &&
           a.body().left().kind() == FormulaKind::Atom && a.body().left().name() == a.name() &&
           a.body().right().kind() == FormulaKind::Atom && a.body().right().name() == a.name();
}

// conj/disj encodings: forall2 Z/0. (A -> B -> Z) -> Z and forall2 Z/0. (A -> Z) -> (B -> Z) -> Z
inline bool is_conj(const Formula& a) {
    if (a.kind() != FormulaKind::Forall2 || a.arity() != 0) return false;
    const Formula& b = a.body();
    return b.kind() == FormulaKind::Imp && b.right().kind() == FormulaKind::Atom && b.right().name() == a.name() &&
           b.left().kind() == FormulaKind::Imp && b.left().right().kind() == FormulaKind::Imp &&
           b.left().right().right().kind() == FormulaKind::Atom && b.left().right().right().name() == a.name();
}

inline bool is_disj(const Formula& a) {
    if (a.kind() != FormulaKind::Forall2 || a.arity() != 0) return false;
    const Formula& b = a.body();
    return b.kind() == FormulaKind::Imp && b.left().kind() == FormulaKind::Imp &&
           b.right().kind() == FormulaKind::Imp && b.right().right().kind() == FormulaKind::Atom &&
           b.right().right().name() == a.name() && b.right().left().kind() == FormulaKind::Imp;
}

}  // namespace detail

inline bool classical(const Formula& a, std::uint64_t n, std::map<std::string, std::uint64_t>& env) {
    switch (a.kind()) {
        case FormulaKind::Top: return true;
        case FormulaKind::Bot: return false;
        case FormulaKind::Imp: return !classical(a.left(), n, env) || classical(a.right(), n, env);
        case FormulaKind::EqImp:
            return fo_value(a.args()[0], env) != fo_value(a.args()[1], env) || classical(a.body(), n, env);
        case FormulaKind::Forall1: {
            auto saved = env;
            bool all = true;
            for (std::uint64_t v = 0; v < n && all; ++v) {
                env[a.name()] = v;
                all = classical(a.body(), n, env);
            }
            env = saved;
            return all;
        }
        case FormulaKind::Forall2:
            if (detail::is_leibniz(a))
                return fo_value(a.body().left().args()[0], env) == fo_value(a.body().right().args()[0], env);
            if (detail::is_conj(a))
                return classical(a.body().left().left(), n, env) && classical(a.body().left().right().left(), n, env);
            if (detail::is_disj(a))
                return classical(a.body().left().left(), n, env) || classical(a.body().right().left().left(), n, env);
            throw std::logic_error("not an arithmetic formula");
        default: throw std::logic_error("not an arithmetic formula");
    }
}

}  // namespace lcr::testing
