#pragma once

// Random term and process generators for property checks.

#include <random>

#include "lcr/syntax.hpp"

namespace lcr {

struct GenOptions {
    bool allow_cc = true;
    bool allow_instr = true;
    bool allow_restricted = true;
    std::uint32_t max_instr = 3;
};

namespace detail {

inline Term leaf(std::mt19937_64& rng, std::uint32_t depth, const GenOptions& o) {
    std::uniform_int_distribution<int> pick(0, 9);
    int k = pick(rng);
    if (depth > 0 && k < 6) return Term::bound(std::uniform_int_distribution<std::uint32_t>(0, depth - 1)(rng));
    if (o.allow_cc && k < 8) return Term::cc();
    if (o.allow_instr) {
        bool r = o.allow_restricted && (rng() & 1);
        return Term::instr(r, std::uniform_int_distribution<std::uint32_t>(0, o.max_instr)(rng));
    }
    if (depth > 0) return Term::bound(0);
    return o.allow_cc ? Term::cc() : Term::lam_raw(Term::bound(0));
}

}  // namespace detail

/// Closed term of exactly `size` constructors (leaves count 1, app/lam count 1).
inline Term random_term(std::mt19937_64& rng, std::size_t size, const GenOptions& o = {}, std::uint32_t depth = 0) {
    if (size <= 1) return detail::leaf(rng, depth, o);
    if (size == 2) return Term::lam_raw(detail::leaf(rng, depth + 1, o));
    std::uniform_int_distribution<int> pick(0, 2);
    if (pick(rng) == 0) return Term::lam_raw(random_term(rng, size - 1, o, depth + 1));
    std::size_t left = std::uniform_int_distribution<std::size_t>(1, size - 2)(rng);
    return Term::app(random_term(rng, left, o, depth), random_term(rng, size - 1 - left, o, depth));
}

/// Closed pure lambda term (no cc, no instructions).
inline Term random_pure(std::mt19937_64& rng, std::size_t size) {
    GenOptions o;
    o.allow_cc = false;
    o.allow_instr = false;
    return random_term(rng, size, o);
}

/// Random process over the gimel instructions (phi, chi, top, gamma_0..gamma_{gammas-1}),
/// never mentioning bot. Total size is `size`; up to two stack elements.
inline Process random_sound_process(std::mt19937_64& rng, std::size_t size, std::uint32_t gammas) {
    GenOptions o;
    o.max_instr = 1 + gammas;
    auto fix = [&](const Term& i) {
        if (!i.restricted()) return Term::instr(false, i.index() % 2);
        if (i.index() == 1) return Term::instr(true, 2 + static_cast<std::uint32_t>(rng() % gammas));
        return i;
    };
    std::size_t items = size >= 3 ? rng() % 3 : 0;
    std::vector<Term> parts;
    std::size_t left = size;
    for (std::size_t k = 0; k <= items; ++k) {
        std::size_t share = k == items ? left : 1 + rng() % std::max<std::size_t>(1, left - (items - k));
        share = std::min(share, left - (items - k));
        left -= share;
        parts.push_back(map_instructions(random_term(rng, share, o), fix));
    }
    Term head = parts[0];
    parts.erase(parts.begin());
    return head * stack_of(parts);
}

}  // namespace lcr
