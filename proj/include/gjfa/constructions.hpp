#pragma once

// Automaton constructions: finite languages, insertion of a finite language
// (once or arbitrarily often), reversal, and union.

#include "gjfa/core.hpp"
#include "gjfa/langops.hpp"

#include <set>
#include <string>

namespace gjfa {

/// Smallest `_g<N>` not already taken.
inline StateId fresh_state(const std::set<StateId>& taken)
{
    for (std::size_t i = 0;; ++i) {
        StateId candidate("_g" + std::to_string(i));
        if (!taken.contains(candidate))
            return candidate;
    }
}

/// ({q, r}, Σ, {(q, w, r) : w ∈ K}, q, {r}).
inline Gjfa finite_gjfa(const LangSet& k, std::set<Symbol> alphabet = {})
{
    auto used = k.symbols();
    alphabet.insert(used.begin(), used.end());
    Gjfa m{{StateId("q"), StateId("r")}, std::move(alphabet), {}, StateId("q"), {StateId("r")}};
    for (const auto& w : k)
        m.rules.insert({StateId("q"), w, StateId("r")});
    return m;
}

/// Recognizes L ← K: a fresh start enters the old start by deleting some v ∈ K.
inline Gjfa insert_gjfa(const Gjfa& base, const LangSet& k)
{
    Gjfa m = base;
    auto used = k.symbols();
    m.alphabet.insert(used.begin(), used.end());
    StateId start = fresh_state(base.states);
    m.states.insert(start);
    m.initial = start;
    for (const auto& v : k)
        m.rules.insert({start, v, base.initial});
    return m;
}

/// Recognizes L ←* K: K-self-loops on a fresh start plus an ε-bridge to the old start.
inline Gjfa insert_star_gjfa(const Gjfa& base, const LangSet& k)
{
    Gjfa m = base;
    auto used = k.symbols();
    m.alphabet.insert(used.begin(), used.end());
    StateId start = fresh_state(base.states);
    m.states.insert(start);
    m.initial = start;
    for (const auto& v : k)
        m.rules.insert({start, v, start});
    m.rules.insert({start, Word{}, base.initial});
    return m;
}

inline Gjfa reverse_gjfa(const Gjfa& m)
{
    Gjfa out = m;
    out.rules.clear();
    for (const auto& r : m.rules)
        out.rules.insert({r.from, r.label.reversed(), r.to});
    return out;
}

namespace detail {

inline Gjfa rename_states(const Gjfa& m, const std::string& suffix)
{
    auto rename = [&](const StateId& q) { return StateId(q.name() + suffix); };
    Gjfa out{{}, m.alphabet, {}, rename(m.initial), {}};
    for (const auto& q : m.states)
        out.states.insert(rename(q));
    for (const auto& f : m.finals)
        out.finals.insert(rename(f));
    for (const auto& r : m.rules)
        out.rules.insert({rename(r.from), r.label, rename(r.to)});
    return out;
}

} // namespace detail

/// States of `a` get suffix `_1`, those of `b` suffix `_2`; a fresh start
/// reaches either old start by an ε-rule and is final iff one of them is.
inline Gjfa union_gjfa(const Gjfa& a, const Gjfa& b)
{
    Gjfa left = detail::rename_states(a, "_1");
    Gjfa right = detail::rename_states(b, "_2");

    Gjfa m{left.states, left.alphabet, left.rules, left.initial, left.finals};
    m.states.insert(right.states.begin(), right.states.end());
    m.alphabet.insert(right.alphabet.begin(), right.alphabet.end());
    m.rules.insert(right.rules.begin(), right.rules.end());
    m.finals.insert(right.finals.begin(), right.finals.end());

    StateId start = fresh_state(m.states);
    m.states.insert(start);
    m.initial = start;
    m.rules.insert({start, Word{}, left.initial});
    m.rules.insert({start, Word{}, right.initial});
    if (a.finals.contains(a.initial) || b.finals.contains(b.initial))
        m.finals.insert(start);
    return m;
}

} // namespace gjfa
