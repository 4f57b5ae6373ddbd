#pragma once

// Domain types shared by every part of the library: symbols, words, rules,
// general jumping finite automata, paths, and a small token NFA.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gjfa {

enum class Errc {
    invalid_token,
    malformed_path,
    unknown_name,
    nonzero_context,
    not_jfa,
    invalid_argument,
    parse_error,
};

inline std::string_view errc_name(Errc c)
{
    switch (c) {
    case Errc::invalid_token: return "invalid-token";
    case Errc::malformed_path: return "malformed-path";
    case Errc::unknown_name: return "unknown-name";
    case Errc::nonzero_context: return "nonzero-context";
    case Errc::not_jfa: return "not-jfa";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::parse_error: return "parse-error";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// The reserved spelling of the empty word in every textual form.
inline constexpr std::string_view kEpsilon = "eps";

inline bool is_token(std::string_view s)
{
    if (s.empty())
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    });
}

struct SymbolTag {
    static constexpr bool reserves_epsilon = true;
    static constexpr std::string_view kind = "symbol";
};

struct StateTag {
    static constexpr bool reserves_epsilon = false;
    static constexpr std::string_view kind = "state";
};

/// Interned name matching `[A-Za-z0-9_]+`; ordering and equality are by name.
template <class Tag>
class Token {
public:
    explicit Token(std::string name) : name_(std::move(name))
    {
        if (!is_token(name_))
            throw Error(Errc::invalid_token, std::string(Tag::kind) + " '" + name_ + "' is not a [A-Za-z0-9_]+ token");
        if (Tag::reserves_epsilon && name_ == kEpsilon)
            throw Error(Errc::invalid_token, "'eps' is reserved for the empty word");
    }
    explicit Token(std::string_view name) : Token(std::string(name)) {}
    explicit Token(const char* name) : Token(std::string(name)) {}

    const std::string& name() const noexcept { return name_; }

    friend auto operator<=>(const Token&, const Token&) = default;
    friend bool operator==(const Token&, const Token&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Token& t) { return os << t.name_; }

private:
    std::string name_;
};

using Symbol = Token<SymbolTag>;
using StateId = Token<StateTag>;

/// A finite symbol sequence. Ordering is shortlex: shorter words first, then
/// lexicographic by symbol name.
class Word {
public:
    using value_type = Symbol;
    using const_iterator = std::vector<Symbol>::const_iterator;

    Word() = default;
    Word(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}
    explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

    /// Parses the dotted form `a.abar.b`; `eps` (or the empty string) is ε.
    static Word parse(std::string_view text)
    {
        Word w;
        if (text.empty() || text == kEpsilon)
            return w;
        std::size_t start = 0;
        while (true) {
            std::size_t dot = text.find('.', start);
            std::string_view part = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
            w.symbols_.emplace_back(part);
            if (dot == std::string_view::npos)
                break;
            start = dot + 1;
        }
        return w;
    }

    std::string str() const
    {
        if (symbols_.empty())
            return std::string(kEpsilon);
        std::string out;
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            if (i)
                out += '.';
            out += symbols_[i].name();
        }
        return out;
    }

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
    const_iterator begin() const noexcept { return symbols_.begin(); }
    const_iterator end() const noexcept { return symbols_.end(); }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

    Word slice(std::size_t pos, std::size_t len = std::string::npos) const
    {
        pos = std::min(pos, size());
        len = std::min(len, size() - pos);
        return Word(std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                                        symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
    }

    Word reversed() const { return Word(std::vector<Symbol>(symbols_.rbegin(), symbols_.rend())); }

    /// `this[0,pos) v this[pos,..)`
    Word inserted(std::size_t pos, const Word& v) const
    {
        std::vector<Symbol> out;
        out.reserve(size() + v.size());
        out.insert(out.end(), symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(pos));
        out.insert(out.end(), v.symbols_.begin(), v.symbols_.end());
        out.insert(out.end(), symbols_.begin() + static_cast<std::ptrdiff_t>(pos), symbols_.end());
        return Word(std::move(out));
    }

    Word erased(std::size_t pos, std::size_t len) const
    {
        std::vector<Symbol> out;
        out.reserve(size() - len);
        out.insert(out.end(), symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(pos));
        out.insert(out.end(), symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len), symbols_.end());
        return Word(std::move(out));
    }

    bool has_factor_at(std::size_t pos, const Word& v) const
    {
        if (pos + v.size() > size())
            return false;
        return std::equal(v.begin(), v.end(), symbols_.begin() + static_cast<std::ptrdiff_t>(pos));
    }

    /// True when `this` is a scattered subword of `w`.
    bool is_subsequence_of(const Word& w) const
    {
        std::size_t j = 0;
        for (std::size_t i = 0; i < w.size() && j < size(); ++i)
            if (w[i] == symbols_[j])
                ++j;
        return j == size();
    }

    std::size_t count(const Symbol& s) const
    {
        return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), s));
    }

    friend Word operator+(const Word& a, const Word& b) { return a.inserted(a.size(), b); }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b)
    {
        if (auto c = a.size() <=> b.size(); c != 0)
            return c;
        return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
    }

    friend std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

private:
    std::vector<Symbol> symbols_;
};

inline namespace literals {
inline Word operator""_w(const char* text, std::size_t len) { return Word::parse(std::string_view(text, len)); }
} // namespace literals

struct Rule {
    StateId from;
    Word label;
    StateId to;

    friend bool operator==(const Rule&, const Rule&) = default;
    friend std::strong_ordering operator<=>(const Rule&, const Rule&) = default;
};

/// M = (Q, Σ, R, s, F). Rules are a set, so duplicates merge on insertion.
struct Gjfa {
    std::set<StateId> states;
    std::set<Symbol> alphabet;
    std::set<Rule> rules;
    StateId initial;
    std::set<StateId> finals;

    friend bool operator==(const Gjfa&, const Gjfa&) = default;
};

struct Diagnostic {
    std::string invariant;
    std::string element;

    std::string message() const { return invariant + ": " + element; }
    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

inline std::vector<Diagnostic> validate(const Gjfa& m)
{
    std::vector<Diagnostic> out;
    if (!m.states.contains(m.initial))
        out.push_back({"initial state not declared", m.initial.name()});
    for (const auto& f : m.finals)
        if (!m.states.contains(f))
            out.push_back({"final state not declared", f.name()});
    for (const auto& r : m.rules) {
        std::string where = r.from.name() + " " + r.label.str() + " " + r.to.name();
        if (!m.states.contains(r.from))
            out.push_back({"rule source not declared", r.from.name() + " in rule " + where});
        if (!m.states.contains(r.to))
            out.push_back({"rule target not declared", r.to.name() + " in rule " + where});
        for (const auto& s : r.label)
            if (!m.alphabet.contains(s))
                out.push_back({"rule symbol not in alphabet", s.name() + " in rule " + where});
    }
    return out;
}

inline std::size_t degree(const Gjfa& m)
{
    std::size_t d = 0;
    for (const auto& r : m.rules)
        d = std::max(d, r.label.size());
    return d;
}

inline bool is_jfa(const Gjfa& m) { return degree(m) <= 1; }

/// Non-empty rule sequence with matching endpoints.
class Path {
public:
    explicit Path(std::vector<Rule> rules) : rules_(std::move(rules))
    {
        if (rules_.empty())
            throw Error(Errc::malformed_path, "a path has at least one rule");
        for (std::size_t i = 0; i + 1 < rules_.size(); ++i)
            if (rules_[i].to != rules_[i + 1].from)
                throw Error(Errc::malformed_path, "rule " + std::to_string(i) + " ends in " + rules_[i].to.name() +
                                                      " but rule " + std::to_string(i + 1) + " starts in " +
                                                      rules_[i + 1].from.name());
    }

    const std::vector<Rule>& rules() const noexcept { return rules_; }
    const StateId& source() const { return rules_.front().from; }
    const StateId& target() const { return rules_.back().to; }
    std::size_t size() const noexcept { return rules_.size(); }

    std::vector<Word> labeling() const
    {
        std::vector<Word> out;
        out.reserve(rules_.size());
        for (const auto& r : rules_)
            out.push_back(r.label);
        return out;
    }

    bool is_accepting(const Gjfa& m) const { return source() == m.initial && m.finals.contains(target()); }

private:
    std::vector<Rule> rules_;
};

inline std::vector<Word> path_labeling(const Path& p) { return p.labeling(); }

/// Finite automaton over single tokens with ε-moves (an absent label).
/// Hosts regular control languages and the classical reading of a JFA.
template <class Label>
struct Nfa {
    struct Transition {
        StateId from;
        std::optional<Label> label;
        StateId to;

        friend bool operator==(const Transition&, const Transition&) = default;
        friend auto operator<=>(const Transition&, const Transition&) = default;
    };

    std::set<StateId> states;
    std::set<Label> labels;
    std::set<Transition> transitions;
    StateId initial;
    std::set<StateId> finals;

    std::vector<Diagnostic> validate() const
    {
        std::vector<Diagnostic> out;
        if (!states.contains(initial))
            out.push_back({"initial state not declared", initial.name()});
        for (const auto& f : finals)
            if (!states.contains(f))
                out.push_back({"final state not declared", f.name()});
        for (const auto& t : transitions) {
            if (!states.contains(t.from))
                out.push_back({"transition source not declared", t.from.name()});
            if (!states.contains(t.to))
                out.push_back({"transition target not declared", t.to.name()});
            if (t.label && !labels.contains(*t.label))
                out.push_back({"transition label not declared", "from " + t.from.name()});
        }
        return out;
    }

    std::set<StateId> closure(std::set<StateId> current) const
    {
        std::vector<StateId> stack(current.begin(), current.end());
        while (!stack.empty()) {
            StateId q = stack.back();
            stack.pop_back();
            for (const auto& t : transitions)
                if (t.from == q && !t.label && current.insert(t.to).second)
                    stack.push_back(t.to);
        }
        return current;
    }

    std::set<StateId> step(const std::set<StateId>& current, const Label& a) const
    {
        std::set<StateId> next;
        for (const auto& t : transitions)
            if (t.label && *t.label == a && current.contains(t.from))
                next.insert(t.to);
        return closure(std::move(next));
    }

    bool accepting(const std::set<StateId>& current) const
    {
        return std::any_of(current.begin(), current.end(), [&](const StateId& q) { return finals.contains(q); });
    }

    template <class Range>
    bool accepts(const Range& input) const
    {
        auto current = closure({initial});
        for (const auto& a : input) {
            current = step(current, a);
            if (current.empty())
                return false;
        }
        return accepting(current);
    }

    /// Every accepted label sequence of length ≤ max_len, by subset-state DFS.
    std::set<std::vector<Label>> enumerate(std::size_t max_len) const
    {
        std::set<std::vector<Label>> out;
        std::vector<Label> prefix;
        std::function<void(const std::set<StateId>&)> visit = [&](const std::set<StateId>& current) {
            if (accepting(current))
                out.insert(prefix);
            if (prefix.size() == max_len)
                return;
            for (const auto& a : labels) {
                auto next = step(current, a);
                if (next.empty())
                    continue;
                prefix.push_back(a);
                visit(next);
                prefix.pop_back();
            }
        };
        visit(closure({initial}));
        return out;
    }

    friend bool operator==(const Nfa&, const Nfa&) = default;
};

} // namespace gjfa

template <class Tag>
struct std::hash<gjfa::Token<Tag>> {
    std::size_t operator()(const gjfa::Token<Tag>& t) const noexcept { return std::hash<std::string>{}(t.name()); }
};

template <>
struct std::hash<gjfa::Word> {
    std::size_t operator()(const gjfa::Word& w) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (const auto& s : w)
            h = (h ^ std::hash<std::string>{}(s.name())) * 0x100000001b3ULL;
        return h;
    }
};
