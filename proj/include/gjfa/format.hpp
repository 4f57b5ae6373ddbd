#pragma once

// Line-oriented text formats for automata and insertion systems.
//
//   kind: gjfa                      kind: gcis
//   alphabet: a abar                alphabet: a abar
//   states: q r                     component: c0 c1
//   initial: q                      initial: c0
//   final: r                        final: c1
//   rule: q abar.a q                axiom: eps
//   rule: q a.abar r                edge: c0 (eps|a.abar|eps) c1
//
//   kind: ins                       kind: rcg
//   alphabet: a abar                alphabet: a b c
//   axiom: eps                      axiom: a.b
//   ins: (eps|a.abar|eps)           rule: (eps|c|eps)
//                                   control-states: p q
//                                   control-initial: p
//                                   control-final: q
//                                   control-edge: p 0 q
//
// `#` starts a comment. Words are `.`-joined tokens, `eps` is the empty word.
// List directives may repeat and accumulate. `kind:` defaults to gjfa.
// Serialization is canonical: every set is written in sorted order.

#include "gjfa/core.hpp"
#include "gjfa/insertion_systems.hpp"
#include "gjfa/langops.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace gjfa {

using SystemValue = std::variant<Gjfa, GcInsSystem, InsSystem, RcGrammar>;

namespace format_detail {

struct Line {
    std::size_t number;
    std::string directive;
    std::vector<std::string> values;
};

[[noreturn]] inline void fail(std::size_t line, const std::string& what)
{
    throw Error(Errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

inline std::vector<Line> split_lines(std::string_view text)
{
    std::vector<Line> out;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        auto colon = raw.find(':');
        std::istringstream words(colon == std::string::npos ? raw : raw.substr(colon + 1));
        std::string head = colon == std::string::npos ? raw : raw.substr(0, colon);
        head.erase(0, head.find_first_not_of(" \t\r"));
        head.erase(head.find_last_not_of(" \t\r") + 1);
        if (colon == std::string::npos) {
            if (!head.empty())
                fail(number, "expected '<directive>: ...'");
            continue;
        }
        Line line{number, head, {}};
        for (std::string w; words >> w;)
            line.values.push_back(w);
        out.push_back(std::move(line));
    }
    return out;
}

template <class F>
auto at_line(std::size_t line, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const Error& e) {
        if (e.code() == Errc::parse_error)
            throw;
        fail(line, e.what());
    }
}

inline InsRule parse_ins_rule(std::size_t line, const std::string& text)
{
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        fail(line, "insertion rule must look like (left|inserted|right), got '" + text + "'");
    std::string body = text.substr(1, text.size() - 2);
    auto first = body.find('|');
    auto second = first == std::string::npos ? first : body.find('|', first + 1);
    if (second == std::string::npos || body.find('|', second + 1) != std::string::npos)
        fail(line, "insertion rule needs exactly three '|'-separated parts: '" + text + "'");
    return at_line(line, [&] {
        return InsRule{Word::parse(body.substr(0, first)), Word::parse(body.substr(first + 1, second - first - 1)),
                       Word::parse(body.substr(second + 1))};
    });
}

inline const std::string& single(const Line& l)
{
    if (l.values.size() != 1)
        fail(l.number, l.directive + ": expects exactly one value");
    return l.values.front();
}

inline void require_valid(const std::vector<Diagnostic>& diagnostics)
{
    if (diagnostics.empty())
        return;
    std::string msg = "invalid system:";
    for (const auto& d : diagnostics)
        msg += " [" + d.message() + "]";
    throw Error(Errc::parse_error, msg);
}

struct Builder {
    std::string kind = "gjfa";
    std::set<Symbol> alphabet;
    std::set<StateId> states;
    std::optional<StateId> initial;
    std::set<StateId> finals;
    std::set<Rule> rules;
    LangSet axioms;
    std::set<GcEdge> edges;
    std::set<InsRule> ins;
    std::vector<InsRule> indexed;
    std::set<StateId> control_states;
    std::optional<StateId> control_initial;
    std::set<StateId> control_finals;
    std::set<Nfa<std::size_t>::Transition> control_edges;
    std::size_t kind_line = 0;
};

inline std::set<std::string> allowed_directives(const std::string& kind)
{
    if (kind == "gjfa")
        return {"kind", "alphabet", "states", "initial", "final", "rule"};
    if (kind == "gcis")
        return {"kind", "alphabet", "component", "initial", "final", "axiom", "edge"};
    if (kind == "ins")
        return {"kind", "alphabet", "axiom", "ins"};
    if (kind == "rcg")
        return {"kind", "alphabet", "axiom", "rule", "control-states", "control-initial", "control-final",
                "control-edge"};
    return {};
}

inline Builder read(std::string_view text)
{
    Builder b;
    auto lines = split_lines(text);
    for (const auto& l : lines)
        if (l.directive == "kind") {
            b.kind = single(l);
            b.kind_line = l.number;
        }
    const auto allowed = allowed_directives(b.kind);
    if (allowed.empty())
        fail(b.kind_line, "unknown kind '" + b.kind + "' (expected gjfa, gcis, ins or rcg)");

    for (const auto& l : lines) {
        const auto& d = l.directive;
        if (!allowed.contains(d))
            fail(l.number, "directive '" + d + "' is not valid in a " + b.kind + " file");
        at_line(l.number, [&] {
            if (d == "kind") {
            } else if (d == "alphabet") {
                for (const auto& v : l.values)
                    b.alphabet.emplace(v);
            } else if (d == "states" || d == "component") {
                for (const auto& v : l.values)
                    b.states.emplace(v);
            } else if (d == "initial") {
                if (b.initial)
                    fail(l.number, "initial given twice");
                b.initial.emplace(single(l));
            } else if (d == "final") {
                if (b.kind == "gcis") {
                    if (!b.finals.empty())
                        fail(l.number, "a gcis has a single final component");
                    b.finals.emplace(single(l));
                } else {
                    for (const auto& v : l.values)
                        b.finals.emplace(v);
                }
            } else if (d == "rule" && b.kind == "gjfa") {
                if (l.values.size() != 3)
                    fail(l.number, "rule: expects <from> <label> <to>");
                b.rules.insert({StateId(l.values[0]), Word::parse(l.values[1]), StateId(l.values[2])});
            } else if (d == "rule") {
                b.indexed.push_back(parse_ins_rule(l.number, single(l)));
            } else if (d == "axiom") {
                for (const auto& v : l.values)
                    b.axioms.insert(Word::parse(v));
            } else if (d == "edge") {
                if (l.values.size() != 3)
                    fail(l.number, "edge: expects <from> (<left>|<ins>|<right>) <to>");
                b.edges.insert({StateId(l.values[0]), parse_ins_rule(l.number, l.values[1]), StateId(l.values[2])});
            } else if (d == "ins") {
                b.ins.insert(parse_ins_rule(l.number, single(l)));
            } else if (d == "control-states") {
                for (const auto& v : l.values)
                    b.control_states.emplace(v);
            } else if (d == "control-initial") {
                if (b.control_initial)
                    fail(l.number, "control-initial given twice");
                b.control_initial.emplace(single(l));
            } else if (d == "control-final") {
                for (const auto& v : l.values)
                    b.control_finals.emplace(v);
            } else if (d == "control-edge") {
                if (l.values.size() != 3)
                    fail(l.number, "control-edge: expects <from> <rule-index|eps> <to>");
                std::optional<std::size_t> label;
                if (l.values[1] != kEpsilon) {
                    std::size_t index = 0;
                    const auto& t = l.values[1];
                    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), index);
                    if (ec != std::errc{} || ptr != t.data() + t.size())
                        fail(l.number, "control-edge label must be a rule index or eps, got '" + t + "'");
                    label = index;
                }
                b.control_edges.insert({StateId(l.values[0]), label, StateId(l.values[2])});
            }
            return 0;
        });
    }
    return b;
}

inline void write_words(std::ostream& os, const std::string& directive, const LangSet& words)
{
    os << directive << ':';
    for (const auto& w : words)
        os << ' ' << w.str();
    os << '\n';
}

template <class Range>
void write_tokens(std::ostream& os, const std::string& directive, const Range& tokens)
{
    os << directive << ':';
    for (const auto& t : tokens)
        os << ' ' << t.name();
    os << '\n';
}

} // namespace format_detail

inline SystemValue parse_system(std::string_view text)
{
    using namespace format_detail;
    Builder b = read(text);
    if (b.kind == "gjfa") {
        if (!b.initial)
            fail(0, "missing 'initial:'");
        Gjfa m{b.states, b.alphabet, b.rules, *b.initial, b.finals};
        require_valid(validate(m));
        return m;
    }
    if (b.kind == "gcis") {
        if (!b.initial || b.finals.empty())
            fail(0, "a gcis needs 'initial:' and 'final:'");
        GcInsSystem g{b.alphabet, b.states, b.edges, b.axioms, *b.initial, *b.finals.begin()};
        require_valid(validate(g));
        return g;
    }
    if (b.kind == "ins") {
        InsSystem s{b.alphabet, b.axioms, b.ins};
        std::vector<Diagnostic> diagnostics;
        for (const auto& r : s.rules)
            for (const auto& sym : rule_symbols(r))
                if (!s.alphabet.contains(sym))
                    diagnostics.push_back({"rule symbol not in alphabet", sym.name() + " in " + r.str()});
        for (const auto& sym : s.axioms.symbols())
            if (!s.alphabet.contains(sym))
                diagnostics.push_back({"axiom symbol not in alphabet", sym.name()});
        require_valid(diagnostics);
        return s;
    }
    if (!b.control_initial)
        fail(0, "missing 'control-initial:'");
    RcGrammar r{b.alphabet, b.axioms, b.indexed, Nfa<std::size_t>{b.control_states, {}, b.control_edges,
                                                                   *b.control_initial, b.control_finals}};
    for (std::size_t i = 0; i < r.rules.size(); ++i)
        r.control.labels.insert(i);
    require_valid(validate(r));
    return r;
}

inline Gjfa parse_gjfa(std::string_view text)
{
    auto v = parse_system(text);
    if (auto* m = std::get_if<Gjfa>(&v))
        return std::move(*m);
    throw Error(Errc::parse_error, "expected a gjfa file");
}

inline std::string serialize(const Gjfa& m)
{
    using namespace format_detail;
    std::ostringstream os;
    os << "kind: gjfa\n";
    write_tokens(os, "alphabet", m.alphabet);
    write_tokens(os, "states", m.states);
    os << "initial: " << m.initial << '\n';
    write_tokens(os, "final", m.finals);
    for (const auto& r : m.rules)
        os << "rule: " << r.from << ' ' << r.label << ' ' << r.to << '\n';
    return os.str();
}

inline std::string serialize(const GcInsSystem& g)
{
    using namespace format_detail;
    std::ostringstream os;
    os << "kind: gcis\n";
    write_tokens(os, "alphabet", g.alphabet);
    write_tokens(os, "component", g.components);
    os << "initial: " << g.initial << '\n';
    os << "final: " << g.final << '\n';
    write_words(os, "axiom", g.axioms);
    for (const auto& e : g.edges)
        os << "edge: " << e.from << ' ' << e.rule.str() << ' ' << e.to << '\n';
    return os.str();
}

inline std::string serialize(const InsSystem& s)
{
    using namespace format_detail;
    std::ostringstream os;
    os << "kind: ins\n";
    write_tokens(os, "alphabet", s.alphabet);
    write_words(os, "axiom", s.axioms);
    for (const auto& r : s.rules)
        os << "ins: " << r.str() << '\n';
    return os.str();
}

inline std::string serialize(const RcGrammar& r)
{
    using namespace format_detail;
    std::ostringstream os;
    os << "kind: rcg\n";
    write_tokens(os, "alphabet", r.alphabet);
    write_words(os, "axiom", r.axioms);
    for (const auto& rule : r.rules)
        os << "rule: " << rule.str() << '\n';
    write_tokens(os, "control-states", r.control.states);
    os << "control-initial: " << r.control.initial << '\n';
    write_tokens(os, "control-final", r.control.finals);
    for (const auto& t : r.control.transitions)
        os << "control-edge: " << t.from << ' ' << (t.label ? std::to_string(*t.label) : std::string(kEpsilon))
           << ' ' << t.to << '\n';
    return os.str();
}

inline std::string serialize(const SystemValue& v)
{
    return std::visit([](const auto& x) { return serialize(x); }, v);
}

} // namespace gjfa
