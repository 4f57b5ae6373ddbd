#pragma once

// Bounded comparisons, the union-of-compositions (UC_n) necessary condition,
// and the permutation-closure check for degree-1 automata.

#include "gjfa/core.hpp"
#include "gjfa/langops.hpp"
#include "gjfa/semantics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gjfa {

struct Counterexample {
    Word word;
    bool in_left;
    bool in_right;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct EquivReport {
    bool equal = true;
    std::size_t bound = 0;
    std::vector<Counterexample> counterexamples;
    bool truncated = false;
};

inline constexpr std::size_t kMaxCounterexamples = 32;

namespace detail {

inline void add_counterexample(EquivReport& report, const Gjfa& a, const Gjfa& b, const Word& w, std::size_t limit)
{
    report.equal = false;
    if (report.counterexamples.size() >= limit) {
        report.truncated = true;
        return;
    }
    // re-checked by deletion so the entry does not rest on enumeration alone
    Counterexample cx{w, jump_accepts(a, w).accepted, jump_accepts(b, w).accepted};
    if (cx.in_left == cx.in_right)
        throw std::logic_error("counterexample " + w.str() + " does not separate the automata");
    report.counterexamples.push_back(std::move(cx));
}

} // namespace detail

inline EquivReport bounded_inclusion(const Gjfa& a, const Gjfa& b, std::size_t max_len,
                                     std::size_t limit = kMaxCounterexamples)
{
    EquivReport report;
    report.bound = max_len;
    const LangSet right = enumerate_language(b, max_len);
    for (const auto& w : enumerate_language(a, max_len))
        if (!right.contains(w))
            detail::add_counterexample(report, a, b, w, limit);
    return report;
}

inline EquivReport bounded_equiv(const Gjfa& a, const Gjfa& b, std::size_t max_len,
                                 std::size_t limit = kMaxCounterexamples)
{
    EquivReport report;
    report.bound = max_len;
    const LangSet left = enumerate_language(a, max_len);
    const LangSet right = enumerate_language(b, max_len);
    std::set<Word> diff;
    for (const auto& w : left)
        if (!right.contains(w))
            diff.insert(w);
    for (const auto& w : right)
        if (!left.contains(w))
            diff.insert(w);
    for (const auto& w : diff)
        detail::add_counterexample(report, a, b, w, limit);
    return report;
}

enum class UcVerdict { passes, falsified };

inline std::string_view verdict_name(UcVerdict v) { return v == UcVerdict::passes ? "passes" : "falsified"; }

/// w = prefix · factor · suffix with the factor starting at `position`.
struct UcFactorization {
    std::size_t position = 0;
    Word prefix;
    Word factor;
    Word suffix;

    Word remainder() const { return prefix + suffix; }
};

/// A split x·y of the remainder for which x · factor · y falls outside L.
struct UcViolation {
    UcFactorization factorization;
    std::size_t split = 0;
    Word probe;
};

struct UcReport {
    UcVerdict verdict = UcVerdict::falsified;
    Word word;
    std::size_t degree = 0;
    bool trivial = false;
    std::optional<UcFactorization> witness;
    std::vector<UcViolation> violations;
};

/// Necessary condition for w ∈ L with L ∈ UC_n: some factor v of w with
/// 1 ≤ |v| ≤ n can be re-inserted at every split of the remaining word
/// without leaving L. Factor occurrences are tried left to right, shorter
/// first; the same factor value at different positions counts separately.
inline UcReport uc_condition(const Membership& member, const Word& w, std::size_t n)
{
    if (w.empty())
        throw Error(Errc::invalid_argument, "the condition is vacuous for the empty word");
    if (n == 0)
        throw Error(Errc::invalid_argument, "degree must be at least 1");
    if (!member(w))
        throw Error(Errc::invalid_argument, "word " + w.str() + " is not in the language");

    UcReport report;
    report.word = w;
    report.degree = n;

    if (n >= w.size()) {
        // v = w with the single empty split
        report.verdict = UcVerdict::passes;
        report.trivial = true;
        report.witness = UcFactorization{0, Word{}, w, Word{}};
        return report;
    }

    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        for (std::size_t len = 1; len <= n && pos + len <= w.size(); ++len) {
            UcFactorization f{pos, w.slice(0, pos), w.slice(pos, len), w.slice(pos + len)};
            const Word rest = f.remainder();
            std::optional<UcViolation> violation;
            for (std::size_t split = 0; split <= rest.size(); ++split) {
                Word probe = rest.inserted(split, f.factor);
                if (!member(probe)) {
                    violation = UcViolation{f, split, std::move(probe)};
                    break;
                }
            }
            if (!violation) {
                report.verdict = UcVerdict::passes;
                report.witness = std::move(f);
                report.violations.clear();
                return report;
            }
            report.violations.push_back(std::move(*violation));
        }
    }
    report.verdict = UcVerdict::falsified;
    return report;
}

/// Re-runs the oracle on everything the report claims.
inline bool uc_report_replays(const UcReport& report, const Membership& member)
{
    if (report.verdict == UcVerdict::passes) {
        if (!report.witness)
            return false;
        const auto& f = *report.witness;
        if (f.prefix + f.factor + f.suffix != report.word || f.factor.empty() || f.factor.size() > report.degree)
            return false;
        const Word rest = f.remainder();
        for (std::size_t split = 0; split <= rest.size(); ++split)
            if (!member(rest.inserted(split, f.factor)))
                return false;
        return true;
    }
    std::size_t expected = 0;
    for (std::size_t pos = 0; pos < report.word.size(); ++pos)
        expected += std::min(report.degree, report.word.size() - pos);
    if (report.violations.size() != expected)
        return false;
    for (const auto& v : report.violations) {
        const auto& f = v.factorization;
        if (f.prefix + f.factor + f.suffix != report.word)
            return false;
        if (v.probe != f.remainder().inserted(v.split, f.factor) || member(v.probe))
            return false;
    }
    return true;
}

struct UcSweep {
    std::vector<UcReport> reports;
    std::optional<std::size_t> first_falsified;

    bool all_pass() const noexcept { return !first_falsified; }
};

/// Applies uc_condition to every non-empty word, in shortlex order.
inline UcSweep uc_sweep(const Membership& member, const LangSet& words, std::size_t n)
{
    UcSweep sweep;
    for (const auto& w : words) {
        if (w.empty())
            continue;
        sweep.reports.push_back(uc_condition(member, w, n));
        if (!sweep.first_falsified && sweep.reports.back().verdict == UcVerdict::falsified)
            sweep.first_falsified = sweep.reports.size() - 1;
    }
    return sweep;
}

inline Membership jump_membership(const Gjfa& m)
{
    return [m](const Word& w) { return jump_accepts(m, w).accepted; };
}

/// Every non-empty word of L(M) up to max_len satisfies the UC condition at
/// n = degree(M). A false result would contradict GJFA ⊆ UC.
inline bool uc_soundness_check(const Gjfa& m, std::size_t max_len)
{
    const std::size_t n = degree(m);
    const LangSet words = enumerate_language(m, max_len);
    if (n == 0)
        return std::all_of(words.begin(), words.end(), [](const Word& w) { return w.empty(); });
    return uc_sweep(jump_membership(m), words, n).all_pass();
}

/// The automaton read as a classical NFA: single-symbol rules are transitions,
/// ε-rules are ε-moves.
inline Nfa<Symbol> classical_reading(const Gjfa& m)
{
    if (!is_jfa(m))
        throw Error(Errc::not_jfa, "automaton has degree " + std::to_string(degree(m)) + " > 1");
    Nfa<Symbol> n{m.states, m.alphabet, {}, m.initial, m.finals};
    for (const auto& r : m.rules) {
        std::optional<Symbol> label;
        if (!r.label.empty())
            label = r.label[0];
        n.transitions.insert({r.from, label, r.to});
    }
    return n;
}

/// L(M) ∩ Σ^{≤k} = perm_closure(N ∩ Σ^{≤k}) for the classical reading N of M.
inline bool jfa_permutation_check(const Gjfa& m, std::size_t max_len)
{
    const Nfa<Symbol> n = classical_reading(m);
    std::set<Word> regular;
    for (auto& seq : n.enumerate(max_len))
        regular.insert(Word(std::move(seq)));
    return enumerate_language(m, max_len) == perm_closure(LangSet(std::move(regular), max_len));
}

} // namespace gjfa
