#pragma once

// Operators on explicit, bounded language fragments: sequential insertion and
// its iterations, reversal, shuffle, homomorphisms, permutation closure, and
// generators for Σ*, the Dyck language and the semi-Dyck languages.

#include "gjfa/core.hpp"

#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gjfa {

using Membership = std::function<bool(const Word&)>;

/// A finite set of words, iterated in shortlex order. A recorded bound states
/// that the set stands for L ∩ Σ^{≤bound}.
class LangSet {
public:
    using const_iterator = std::set<Word>::const_iterator;

    LangSet() = default;
    LangSet(std::initializer_list<Word> words) : words_(words) {}
    explicit LangSet(std::set<Word> words, std::optional<std::size_t> bound = std::nullopt)
        : words_(std::move(words)), bound_(bound)
    {
        if (bound_)
            std::erase_if(words_, [&](const Word& w) { return w.size() > *bound_; });
    }

    /// Builds a set from dotted words, e.g. {"a.b", "eps"}.
    static LangSet parse(std::initializer_list<std::string_view> words)
    {
        LangSet out;
        for (auto w : words)
            out.words_.insert(Word::parse(w));
        return out;
    }

    bool insert(Word w)
    {
        if (bound_ && w.size() > *bound_)
            return false;
        return words_.insert(std::move(w)).second;
    }

    bool contains(const Word& w) const { return words_.contains(w); }
    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }
    const_iterator begin() const noexcept { return words_.begin(); }
    const_iterator end() const noexcept { return words_.end(); }
    const std::set<Word>& words() const noexcept { return words_; }

    std::optional<std::size_t> bound() const noexcept { return bound_; }
    LangSet with_bound(std::optional<std::size_t> bound) const { return LangSet(words_, bound); }

    std::size_t max_length() const { return words_.empty() ? 0 : words_.rbegin()->size(); }

    std::set<Symbol> symbols() const
    {
        std::set<Symbol> out;
        for (const auto& w : words_)
            out.insert(w.begin(), w.end());
        return out;
    }

    /// Language equality; the recorded bound is metadata and is ignored.
    friend bool operator==(const LangSet& a, const LangSet& b) { return a.words_ == b.words_; }

    std::string str() const
    {
        std::string out = "{";
        bool first = true;
        for (const auto& w : words_) {
            out += first ? "" : ", ";
            out += w.str();
            first = false;
        }
        return out + "}";
    }

    friend std::ostream& operator<<(std::ostream& os, const LangSet& l) { return os << l.str(); }

private:
    std::set<Word> words_;
    std::optional<std::size_t> bound_;
};

inline LangSet set_union(const LangSet& a, const LangSet& b)
{
    std::set<Word> out = a.words();
    out.insert(b.begin(), b.end());
    return LangSet(std::move(out));
}

inline LangSet set_intersection(const LangSet& a, const LangSet& b)
{
    std::set<Word> out;
    for (const auto& w : a)
        if (b.contains(w))
            out.insert(w);
    return LangSet(std::move(out));
}

inline LangSet truncate(const LangSet& l, std::size_t max_len) { return LangSet(l.words(), max_len); }

/// L ← K = { u₁ v u₂ : u₁u₂ ∈ L, v ∈ K }.
inline LangSet insert(const LangSet& l, const LangSet& k)
{
    std::set<Word> out;
    for (const auto& u : l)
        for (std::size_t p = 0; p <= u.size(); ++p)
            for (const auto& v : k)
                out.insert(u.inserted(p, v));
    std::optional<std::size_t> bound;
    if (l.bound())
        bound = *l.bound() + k.max_length();
    return LangSet(std::move(out), bound);
}

inline LangSet insert_iter(const LangSet& l, const LangSet& k, std::size_t times)
{
    LangSet out = l;
    for (std::size_t i = 0; i < times; ++i)
        out = insert(out, k);
    return out;
}

/// (L ←* K) ∩ Σ^{≤max_len}. ε is dropped from K first: inserting it is a no-op.
inline LangSet insert_star_bounded(const LangSet& l, const LangSet& k, std::size_t max_len)
{
    std::vector<Word> pieces;
    for (const auto& v : k)
        if (!v.empty())
            pieces.push_back(v);

    std::set<Word> out;
    std::deque<Word> frontier;
    for (const auto& u : l)
        if (u.size() <= max_len && out.insert(u).second)
            frontier.push_back(u);
    while (!frontier.empty()) {
        Word u = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& v : pieces) {
            if (u.size() + v.size() > max_len)
                continue;
            for (std::size_t p = 0; p <= u.size(); ++p) {
                Word next = u.inserted(p, v);
                if (out.insert(next).second)
                    frontier.push_back(std::move(next));
            }
        }
    }
    return LangSet(std::move(out), max_len);
}

/// The labels v₁,…,v_d of a composition ε ← v_d ← ⋯ ← v₁.
struct Composition {
    std::vector<Word> labels;

    std::size_t degree() const
    {
        std::size_t d = 0;
        for (const auto& v : labels)
            d = std::max(d, v.size());
        return d;
    }
};

/// ε ← v_d ← v_{d−1} ← ⋯ ← v₁, evaluated from the left (v_d is inserted first).
inline LangSet eval_composition(const Composition& c)
{
    LangSet out{Word{}};
    for (auto it = c.labels.rbegin(); it != c.labels.rend(); ++it)
        out = insert(out, LangSet{*it});
    return out;
}

inline LangSet reverse_set(const LangSet& l)
{
    std::set<Word> out;
    for (const auto& w : l)
        out.insert(w.reversed());
    return LangSet(std::move(out), l.bound());
}

namespace detail {

inline void interleave(const Word& u, const Word& v, std::size_t i, std::size_t j, std::vector<Symbol>& acc,
                       std::set<Word>& out)
{
    if (i == u.size() && j == v.size()) {
        out.insert(Word(acc));
        return;
    }
    if (i < u.size()) {
        acc.push_back(u[i]);
        interleave(u, v, i + 1, j, acc, out);
        acc.pop_back();
    }
    if (j < v.size()) {
        acc.push_back(v[j]);
        interleave(u, v, i, j + 1, acc, out);
        acc.pop_back();
    }
}

} // namespace detail

/// shuffle(K, L) ∩ Σ^{≤max_len}: every interleaving of a K-word with an L-word.
inline LangSet shuffle_sets(const LangSet& k, const LangSet& l, std::size_t max_len)
{
    std::set<Word> out;
    std::vector<Symbol> acc;
    for (const auto& u : k)
        for (const auto& v : l)
            if (u.size() + v.size() <= max_len)
                detail::interleave(u, v, 0, 0, acc, out);
    return LangSet(std::move(out), max_len);
}

struct Homomorphism {
    std::map<Symbol, Word> mapping;

    std::set<Symbol> domain() const
    {
        std::set<Symbol> out;
        for (const auto& [a, _] : mapping)
            out.insert(a);
        return out;
    }

    std::set<Symbol> codomain() const
    {
        std::set<Symbol> out;
        for (const auto& [_, image] : mapping)
            out.insert(image.begin(), image.end());
        return out;
    }

    Word operator()(const Word& w) const
    {
        std::vector<Symbol> out;
        for (const auto& a : w) {
            auto it = mapping.find(a);
            if (it == mapping.end())
                throw Error(Errc::invalid_argument, "symbol " + a.name() + " is outside the homomorphism's domain");
            out.insert(out.end(), it->second.begin(), it->second.end());
        }
        return Word(std::move(out));
    }
};

inline LangSet hom_image(const Homomorphism& h, const LangSet& l)
{
    std::set<Word> out;
    for (const auto& w : l)
        out.insert(h(w));
    return LangSet(std::move(out));
}

inline LangSet sigma_star_bounded(const std::set<Symbol>& alphabet, std::size_t max_len);

/// { v ∈ Δ^{≤max_domain_len} : member(h(v)) }, by exhaustive search of the domain side.
inline LangSet hom_preimage_bounded(const Homomorphism& h, const Membership& member, std::size_t max_domain_len)
{
    std::set<Word> out;
    for (const auto& v : sigma_star_bounded(h.domain(), max_domain_len))
        if (member(h(v)))
            out.insert(v);
    return LangSet(std::move(out), max_domain_len);
}

/// All words sharing a Parikh vector with some word of l.
inline LangSet perm_closure(const LangSet& l)
{
    std::set<Word> out;
    for (const auto& w : l) {
        std::vector<Symbol> letters = w.symbols();
        std::sort(letters.begin(), letters.end());
        do {
            out.insert(Word(letters));
        } while (std::next_permutation(letters.begin(), letters.end()));
    }
    return LangSet(std::move(out), l.bound());
}

inline LangSet sigma_star_bounded(const std::set<Symbol>& alphabet, std::size_t max_len)
{
    LangSet letters;
    for (const auto& a : alphabet)
        letters.insert(Word{a});
    return insert_star_bounded(LangSet{Word{}}, letters, max_len);
}

/// Symbol pair (a, abar) of the Dyck language.
inline Word dyck_pair() { return Word{Symbol("a"), Symbol("abar")}; }

/// Bracket pair i (1-based) of the semi-Dyck languages: (a<i>, a<i>bar).
inline Word semi_dyck_pair(std::size_t i)
{
    std::string open = "a" + std::to_string(i);
    return Word{Symbol(open), Symbol(open + "bar")};
}

/// ε ←* aā, truncated.
inline LangSet dyck_bounded(std::size_t max_len) { return insert_star_bounded(LangSet{Word{}}, LangSet{dyck_pair()}, max_len); }

/// ε ←* {a₁ā₁, …, a_kā_k}, truncated.
inline LangSet semi_dyck_bounded(std::size_t k, std::size_t max_len)
{
    if (k == 0)
        throw Error(Errc::invalid_argument, "semi-Dyck languages need at least one bracket pair");
    LangSet pairs;
    for (std::size_t i = 1; i <= k; ++i)
        pairs.insert(semi_dyck_pair(i));
    return insert_star_bounded(LangSet{Word{}}, pairs, max_len);
}

} // namespace gjfa
