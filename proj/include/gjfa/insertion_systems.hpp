#pragma once

// Insertion systems with contexts, their graph-controlled variant, regular
// control semicontextual grammars, and the conversions between context-free
// (0,0) systems and GJFA.

#include "gjfa/constructions.hpp"
#include "gjfa/core.hpp"
#include "gjfa/langops.hpp"

#include <deque>
#include <map>
#include <set>
#include <tuple>
#include <vector>

namespace gjfa {

/// (u, α, v): from w₁ u v w₂ derive w₁ u α v w₂.
struct InsRule {
    Word left;
    Word inserted;
    Word right;

    bool context_free() const noexcept { return left.empty() && right.empty(); }
    std::string str() const { return "(" + left.str() + "|" + inserted.str() + "|" + right.str() + ")"; }

    friend bool operator==(const InsRule&, const InsRule&) = default;
    friend std::strong_ordering operator<=>(const InsRule&, const InsRule&) = default;
};

inline std::set<Symbol> rule_symbols(const InsRule& r)
{
    std::set<Symbol> out(r.left.begin(), r.left.end());
    out.insert(r.inserted.begin(), r.inserted.end());
    out.insert(r.right.begin(), r.right.end());
    return out;
}

/// All one-step successors of w under a single rule.
inline std::set<Word> apply_rule(const InsRule& r, const Word& w)
{
    std::set<Word> out;
    if (r.left.size() + r.right.size() > w.size())
        return out;
    for (std::size_t p = r.left.size(); p + r.right.size() <= w.size(); ++p)
        if (w.has_factor_at(p - r.left.size(), r.left) && w.has_factor_at(p, r.right))
            out.insert(w.inserted(p, r.inserted));
    return out;
}

struct InsSystem {
    std::set<Symbol> alphabet;
    LangSet axioms;
    std::set<InsRule> rules;

    friend bool operator==(const InsSystem&, const InsSystem&) = default;
};

inline std::set<Word> ins_derive_step(const InsSystem& sys, const Word& w)
{
    std::set<Word> out;
    for (const auto& r : sys.rules) {
        auto next = apply_rule(r, w);
        out.insert(next.begin(), next.end());
    }
    return out;
}

inline LangSet ins_enumerate(const InsSystem& sys, std::size_t max_len)
{
    std::set<Word> out;
    std::deque<Word> frontier;
    for (const auto& a : sys.axioms)
        if (a.size() <= max_len && out.insert(a).second)
            frontier.push_back(a);
    while (!frontier.empty()) {
        Word w = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& r : sys.rules) {
            if (w.size() + r.inserted.size() > max_len)
                continue;
            for (auto& next : apply_rule(r, w))
                if (out.insert(next).second)
                    frontier.push_back(std::move(next));
        }
    }
    return LangSet(std::move(out), max_len);
}

/// The class parameters (n, m, m′) of ins_n^{m,m′}.
struct InsClass {
    std::size_t inserted = 0;
    std::size_t left = 0;
    std::size_t right = 0;

    friend bool operator==(const InsClass&, const InsClass&) = default;
};

template <class Rules>
InsClass classify_rules(const Rules& rules)
{
    InsClass c;
    for (const InsRule& r : rules) {
        c.inserted = std::max(c.inserted, r.inserted.size());
        c.left = std::max(c.left, r.left.size());
        c.right = std::max(c.right, r.right.size());
    }
    return c;
}

inline InsClass ins_classify(const InsSystem& sys) { return classify_rules(sys.rules); }

struct GcEdge {
    StateId from;
    InsRule rule;
    StateId to;

    friend bool operator==(const GcEdge&, const GcEdge&) = default;
    friend std::strong_ordering operator<=>(const GcEdge&, const GcEdge&) = default;
};

/// Graph-controlled insertion system. Parallel edges with the same rule are
/// merged since they cannot change the language.
struct GcInsSystem {
    std::set<Symbol> alphabet;
    std::set<StateId> components;
    std::set<GcEdge> edges;
    LangSet axioms;
    StateId initial;
    StateId final;

    friend bool operator==(const GcInsSystem&, const GcInsSystem&) = default;
};

inline std::vector<Diagnostic> validate(const GcInsSystem& g)
{
    std::vector<Diagnostic> out;
    if (!g.components.contains(g.initial))
        out.push_back({"initial component not declared", g.initial.name()});
    if (!g.components.contains(g.final))
        out.push_back({"final component not declared", g.final.name()});
    for (const auto& e : g.edges) {
        if (!g.components.contains(e.from))
            out.push_back({"edge source not declared", e.from.name()});
        if (!g.components.contains(e.to))
            out.push_back({"edge target not declared", e.to.name()});
        for (const auto& s : rule_symbols(e.rule))
            if (!g.alphabet.contains(s))
                out.push_back({"rule symbol not in alphabet", s.name() + " in " + e.rule.str()});
    }
    for (const auto& s : g.axioms.symbols())
        if (!g.alphabet.contains(s))
            out.push_back({"axiom symbol not in alphabet", s.name()});
    return out;
}

/// Words reachable from an axiom at the initial component along edges, read
/// off at the final component. A path of length zero accepts the axioms
/// exactly when initial = final.
inline LangSet gcis_enumerate(const GcInsSystem& g, std::size_t max_len)
{
    std::map<StateId, std::vector<const GcEdge*>> by_source;
    for (const auto& e : g.edges)
        by_source[e.from].push_back(&e);

    std::set<std::pair<StateId, Word>> visited;
    std::deque<std::pair<StateId, Word>> frontier;
    std::set<Word> out;
    for (const auto& a : g.axioms)
        if (a.size() <= max_len && visited.insert({g.initial, a}).second)
            frontier.push_back({g.initial, a});
    while (!frontier.empty()) {
        auto [c, w] = std::move(frontier.front());
        frontier.pop_front();
        if (c == g.final)
            out.insert(w);
        auto it = by_source.find(c);
        if (it == by_source.end())
            continue;
        for (const GcEdge* e : it->second) {
            if (w.size() + e->rule.inserted.size() > max_len)
                continue;
            for (auto& next : apply_rule(e->rule, w))
                if (visited.insert({e->to, next}).second)
                    frontier.push_back({e->to, std::move(next)});
        }
    }
    return LangSet(std::move(out), max_len);
}

/// Same state graph with every rule reversed into a context-free insertion,
/// axiom ε, and a fresh initial component with ε-edges into each final state.
inline GcInsSystem gcis_from_gjfa(const Gjfa& m)
{
    StateId entry = fresh_state(m.states);
    GcInsSystem g{m.alphabet, m.states, {}, LangSet{Word{}}, entry, m.initial};
    g.components.insert(entry);
    for (const auto& r : m.rules)
        g.edges.insert({r.to, InsRule{Word{}, r.label, Word{}}, r.from});
    for (const auto& f : m.finals)
        g.edges.insert({entry, InsRule{}, f});
    return g;
}

namespace detail {

template <class Rules>
void require_context_free(const Rules& rules)
{
    for (const InsRule& r : rules)
        if (!r.context_free())
            throw Error(Errc::nonzero_context, "rule " + r.str() + " has a non-empty context");
}

} // namespace detail

/// Start at the final component, walk edges backwards deleting their
/// insertions, and finish by deleting an axiom at the initial component.
inline Gjfa gjfa_from_gcis(const GcInsSystem& g)
{
    std::vector<InsRule> rules;
    for (const auto& e : g.edges)
        rules.push_back(e.rule);
    detail::require_context_free(rules);

    StateId accept = fresh_state(g.components);
    Gjfa m{g.components, g.alphabet, {}, g.final, {accept}};
    m.states.insert(accept);
    auto used = g.axioms.symbols();
    m.alphabet.insert(used.begin(), used.end());
    for (const auto& e : g.edges)
        m.rules.insert({e.to, e.rule.inserted, e.from});
    for (const auto& a : g.axioms)
        m.rules.insert({g.initial, a, accept});
    return m;
}

/// Regular control semicontextual grammar: rule index sequences must be
/// accepted by `control`.
struct RcGrammar {
    std::set<Symbol> alphabet;
    LangSet axioms;
    std::vector<InsRule> rules;
    Nfa<std::size_t> control;

    friend bool operator==(const RcGrammar&, const RcGrammar&) = default;
};

inline std::vector<Diagnostic> validate(const RcGrammar& r)
{
    auto out = r.control.validate();
    std::set<std::size_t> indices;
    for (std::size_t i = 0; i < r.rules.size(); ++i)
        indices.insert(i);
    if (r.control.labels != indices)
        out.push_back({"control alphabet differs from the rule index set", std::to_string(r.rules.size()) + " rules"});
    for (const auto& rule : r.rules)
        for (const auto& s : rule_symbols(rule))
            if (!r.alphabet.contains(s))
                out.push_back({"rule symbol not in alphabet", s.name() + " in " + rule.str()});
    return out;
}

inline LangSet rcg_enumerate(const RcGrammar& r, std::size_t max_len)
{
    std::map<StateId, std::vector<const Nfa<std::size_t>::Transition*>> by_source;
    for (const auto& t : r.control.transitions)
        by_source[t.from].push_back(&t);

    std::set<std::pair<StateId, Word>> visited;
    std::deque<std::pair<StateId, Word>> frontier;
    std::set<Word> out;
    for (const auto& a : r.axioms)
        if (a.size() <= max_len && visited.insert({r.control.initial, a}).second)
            frontier.push_back({r.control.initial, a});
    while (!frontier.empty()) {
        auto [q, w] = std::move(frontier.front());
        frontier.pop_front();
        if (r.control.finals.contains(q))
            out.insert(w);
        auto it = by_source.find(q);
        if (it == by_source.end())
            continue;
        for (const auto* t : it->second) {
            if (!t->label) {
                if (visited.insert({t->to, w}).second)
                    frontier.push_back({t->to, w});
                continue;
            }
            if (*t->label >= r.rules.size())
                throw Error(Errc::invalid_argument, "control references rule " + std::to_string(*t->label));
            const InsRule& rule = r.rules[*t->label];
            if (w.size() + rule.inserted.size() > max_len)
                continue;
            for (auto& next : apply_rule(rule, w))
                if (visited.insert({t->to, next}).second)
                    frontier.push_back({t->to, std::move(next)});
        }
    }
    return LangSet(std::move(out), max_len);
}

/// Rules are the distinct edge labels in canonical order; the control NFA is
/// the component graph relabeled by rule indices.
inline RcGrammar rcg_from_gcis(const GcInsSystem& g)
{
    std::set<InsRule> distinct;
    for (const auto& e : g.edges)
        distinct.insert(e.rule);
    detail::require_context_free(distinct);

    RcGrammar r{g.alphabet, g.axioms, std::vector<InsRule>(distinct.begin(), distinct.end()),
                Nfa<std::size_t>{g.components, {}, {}, g.initial, {g.final}}};
    std::map<InsRule, std::size_t> index;
    for (std::size_t i = 0; i < r.rules.size(); ++i) {
        index[r.rules[i]] = i;
        r.control.labels.insert(i);
    }
    for (const auto& e : g.edges)
        r.control.transitions.insert({e.from, index.at(e.rule), e.to});
    return r;
}

/// Components are the control states; ε-moves become ε-insertions, and
/// several final control states are joined into a fresh final component.
inline GcInsSystem gcis_from_rcg(const RcGrammar& r)
{
    detail::require_context_free(r.rules);

    GcInsSystem g{r.alphabet, r.control.states, {}, r.axioms, r.control.initial, r.control.initial};
    for (const auto& t : r.control.transitions) {
        InsRule rule = t.label ? r.rules.at(*t.label) : InsRule{};
        g.edges.insert({t.from, std::move(rule), t.to});
    }
    if (r.control.finals.size() == 1) {
        g.final = *r.control.finals.begin();
    } else {
        g.final = fresh_state(g.components);
        g.components.insert(g.final);
        for (const auto& f : r.control.finals)
            g.edges.insert({f, InsRule{}, g.final});
    }
    return g;
}

} // namespace gjfa
