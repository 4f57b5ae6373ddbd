#pragma once

// The two readings of a GJFA computation.
//
// Deletion: a configuration (q, w) steps to (r, w') by a rule (q, v, r) where
// w' is w with one occurrence of the factor v removed. The head position is
// not tracked because any factor may be deleted in each step.
//
// Generation: w is accepted iff w = ε and s ∈ F, or w ∈ ε ← v_d ← ⋯ ← v₁ for
// the labeling v₁,…,v_d of an accepting path. The chain inserts v_d first, so
// it is walked backwards from the final states.

#include "gjfa/core.hpp"
#include "gjfa/langops.hpp"

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace gjfa {

struct Configuration {
    StateId state;
    Word word;

    friend bool operator==(const Configuration&, const Configuration&) = default;
    friend std::strong_ordering operator<=>(const Configuration&, const Configuration&) = default;
};

/// One deletion: `rule` removed its label at `position` of the current word.
struct JumpStep {
    Rule rule;
    std::size_t position;

    friend bool operator==(const JumpStep&, const JumpStep&) = default;
};

/// An accepting computation. Empty `steps` is the empty-accept case (w = ε, s ∈ F).
struct AcceptanceWitness {
    std::vector<JumpStep> steps;

    bool empty_accept() const noexcept { return steps.empty(); }

    std::optional<Path> path() const
    {
        if (steps.empty())
            return std::nullopt;
        std::vector<Rule> rules;
        for (const auto& s : steps)
            rules.push_back(s.rule);
        return Path(std::move(rules));
    }

    /// Evaluates ε ← v_d ← ⋯ ← v₁ using the recorded positions.
    Word replay() const
    {
        Word w;
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
            if (it->position > w.size())
                throw Error(Errc::invalid_argument, "witness position out of range");
            w = w.inserted(it->position, it->rule.label);
        }
        return w;
    }
};

struct JumpResult {
    bool accepted = false;
    std::optional<AcceptanceWitness> witness;

    explicit operator bool() const noexcept { return accepted; }
};

namespace detail {

inline std::map<StateId, std::vector<const Rule*>> rules_by_source(const Gjfa& m)
{
    std::map<StateId, std::vector<const Rule*>> out;
    for (const auto& r : m.rules)
        out[r.from].push_back(&r);
    return out;
}

inline std::map<StateId, std::vector<const Rule*>> rules_by_target(const Gjfa& m)
{
    std::map<StateId, std::vector<const Rule*>> out;
    for (const auto& r : m.rules)
        out[r.to].push_back(&r);
    return out;
}

template <class Visit>
void for_each_deletion(const Rule& r, const Word& w, Visit&& visit)
{
    if (r.label.empty()) {
        visit(std::size_t{0}, w);
        return;
    }
    for (std::size_t p = 0; p + r.label.size() <= w.size(); ++p)
        if (w.has_factor_at(p, r.label))
            visit(p, w.erased(p, r.label.size()));
}

} // namespace detail

inline std::set<Configuration> delete_successors(const Gjfa& m, const Configuration& c)
{
    std::set<Configuration> out;
    for (const auto& r : m.rules) {
        if (r.from != c.state)
            continue;
        detail::for_each_deletion(r, c.word, [&](std::size_t, Word next) { out.insert({r.to, std::move(next)}); });
    }
    return out;
}

/// Breadth-first search from (s, w) towards some (f, ε) with f ∈ F.
inline JumpResult jump_accepts(const Gjfa& m, const Word& w)
{
    struct Node {
        Configuration config;
        std::size_t parent;
        std::optional<JumpStep> step;
    };

    const auto by_source = detail::rules_by_source(m);
    std::vector<Node> nodes;
    std::set<Configuration> visited;
    nodes.push_back({{m.initial, w}, 0, std::nullopt});
    visited.insert(nodes.back().config);

    for (std::size_t head = 0; head < nodes.size(); ++head) {
        if (nodes[head].config.word.empty() && m.finals.contains(nodes[head].config.state)) {
            AcceptanceWitness witness;
            for (std::size_t i = head; nodes[i].step; i = nodes[i].parent)
                witness.steps.push_back(*nodes[i].step);
            std::reverse(witness.steps.begin(), witness.steps.end());
            return {true, std::move(witness)};
        }
        auto it = by_source.find(nodes[head].config.state);
        if (it == by_source.end())
            continue;
        // nodes grows below; keep a copy of the word being expanded
        const Word current = nodes[head].config.word;
        for (const Rule* r : it->second) {
            detail::for_each_deletion(*r, current, [&](std::size_t p, Word next) {
                Configuration c{r->to, std::move(next)};
                if (visited.insert(c).second)
                    nodes.push_back({std::move(c), head, JumpStep{*r, p}});
            });
        }
    }
    return {false, std::nullopt};
}

/// Backward walk from (f, ε), f ∈ F, inserting labels until (s, w) is met.
/// Every intermediate word arises from w by factor deletions, so words that
/// are not scattered subwords of w are pruned.
inline bool generate_accepts(const Gjfa& m, const Word& w)
{
    const auto by_target = detail::rules_by_target(m);
    std::set<Configuration> visited;
    std::deque<Configuration> frontier;
    for (const auto& f : m.finals)
        if (visited.insert({f, Word{}}).second)
            frontier.push_back({f, Word{}});

    while (!frontier.empty()) {
        Configuration c = std::move(frontier.front());
        frontier.pop_front();
        if (c.state == m.initial && c.word == w)
            return true;
        auto it = by_target.find(c.state);
        if (it == by_target.end())
            continue;
        for (const Rule* r : it->second) {
            if (c.word.size() + r->label.size() > w.size())
                continue;
            const std::size_t positions = r->label.empty() ? 1 : c.word.size() + 1;
            for (std::size_t p = 0; p < positions; ++p) {
                Configuration next{r->from, c.word.inserted(p, r->label)};
                if (!next.word.is_subsequence_of(w))
                    continue;
                if (visited.insert(next).second)
                    frontier.push_back(std::move(next));
            }
        }
    }
    return false;
}

/// L(M) ∩ Σ^{≤max_len} by the backward generation with a global length cap.
inline LangSet enumerate_language(const Gjfa& m, std::size_t max_len)
{
    const auto by_target = detail::rules_by_target(m);
    std::set<Configuration> visited;
    std::deque<Configuration> frontier;
    std::set<Word> out;
    for (const auto& f : m.finals)
        if (visited.insert({f, Word{}}).second)
            frontier.push_back({f, Word{}});

    while (!frontier.empty()) {
        Configuration c = std::move(frontier.front());
        frontier.pop_front();
        if (c.state == m.initial)
            out.insert(c.word);
        auto it = by_target.find(c.state);
        if (it == by_target.end())
            continue;
        for (const Rule* r : it->second) {
            if (c.word.size() + r->label.size() > max_len)
                continue;
            const std::size_t positions = r->label.empty() ? 1 : c.word.size() + 1;
            for (std::size_t p = 0; p < positions; ++p) {
                Configuration next{r->from, c.word.inserted(p, r->label)};
                if (visited.insert(next).second)
                    frontier.push_back(std::move(next));
            }
        }
    }
    return LangSet(std::move(out), max_len);
}

} // namespace gjfa
