#pragma once

// Named automata, membership predicates, homomorphisms and insertion systems
// used by the tests and exposed by the command-line tool.

#include "gjfa/constructions.hpp"
#include "gjfa/core.hpp"
#include "gjfa/insertion_systems.hpp"
#include "gjfa/langops.hpp"

#include <string>
#include <variant>
#include <vector>

namespace gjfa {

enum class EntryKind { gjfa, predicate, homomorphism, gcis };

inline std::string_view kind_name(EntryKind k)
{
    switch (k) {
    case EntryKind::gjfa: return "gjfa";
    case EntryKind::predicate: return "predicate";
    case EntryKind::homomorphism: return "homomorphism";
    case EntryKind::gcis: return "gcis";
    }
    return "unknown";
}

struct CorpusEntry {
    std::string name;
    EntryKind kind;
    std::variant<Gjfa, Membership, Homomorphism, GcInsSystem> value;
    std::string citation;
    /// Alphabet the entry is meant to be exercised over.
    std::set<Symbol> alphabet;

    const Gjfa& gjfa() const { return std::get<Gjfa>(value); }
    const Membership& predicate() const { return std::get<Membership>(value); }
    const Homomorphism& homomorphism() const { return std::get<Homomorphism>(value); }
    const GcInsSystem& gcis() const { return std::get<GcInsSystem>(value); }
};

inline std::set<Symbol> symbols_of(std::initializer_list<const char*> names)
{
    std::set<Symbol> out;
    for (const char* n : names)
        out.emplace(n);
    return out;
}

inline Gjfa sigma_star_gjfa(const std::set<Symbol>& alphabet)
{
    LangSet letters;
    for (const auto& a : alphabet)
        letters.insert(Word{a});
    return insert_star_gjfa(finite_gjfa(LangSet{Word{}}, alphabet), letters);
}

/// w ←* K.
inline Gjfa unitary(const Word& w, const LangSet& k, std::set<Symbol> alphabet = {})
{
    return insert_star_gjfa(finite_gjfa(LangSet{w}, std::move(alphabet)), k);
}

namespace predicates {

inline bool ab_star(const Word& w)
{
    if (w.size() % 2 != 0)
        return false;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i].name() != (i % 2 == 0 ? "a" : "b"))
            return false;
    return true;
}

inline bool dyck_balance(const Word& w)
{
    long depth = 0;
    for (const auto& s : w) {
        if (s.name() == "a")
            ++depth;
        else if (s.name() == "abar" && depth > 0)
            --depth;
        else
            return false;
    }
    return depth == 0;
}

inline bool semidyck2_balance(const Word& w)
{
    std::vector<char> open;
    for (const auto& s : w) {
        const auto& n = s.name();
        if (n == "a1" || n == "a2") {
            open.push_back(n[1]);
        } else if ((n == "a1bar" || n == "a2bar") && !open.empty() && open.back() == n[1]) {
            open.pop_back();
        } else {
            return false;
        }
    }
    return open.empty();
}

inline bool equal_counts(const Word& w)
{
    std::size_t a = 0, b = 0, c = 0;
    for (const auto& s : w) {
        if (s.name() == "a")
            ++a;
        else if (s.name() == "b")
            ++b;
        else if (s.name() == "c")
            ++c;
        else
            return false;
    }
    return a == b && b == c;
}

} // namespace predicates

namespace detail {

inline std::vector<CorpusEntry> build_catalog()
{
    std::vector<CorpusEntry> out;
    const auto dyck_sigma = symbols_of({"a", "abar"});
    const auto semidyck_sigma = symbols_of({"a1", "a1bar", "a2", "a2bar"});
    const auto abc = symbols_of({"a", "b", "c"});
    const auto ab = symbols_of({"a", "b"});
    const StateId q("q"), r("r"), q0("q0"), q1("q1"), q2("q2");

    Gjfa equal_counts{{q0, q1, q2}, abc,
                      {{q0, "a"_w, q1}, {q1, "b"_w, q2}, {q2, "c"_w, q0}}, q0, {q0}};
    out.push_back({"equal_counts_jfa", EntryKind::gjfa, equal_counts,
                   "Example 2: JFA accepting |w|_a = |w|_b = |w|_c (alphabet {a,b,c}; the printed '{a,b,c}*' is a typo)",
                   abc});

    Gjfa thm1{{q, r}, dyck_sigma, {{q, "abar.a"_w, q}, {q, "a.abar"_w, r}}, q, {r}};
    out.push_back({"thm1_m", EntryKind::gjfa, thm1, "Theorem 1: GJFA M with D ∩ L(M) = {a abar}*", dyck_sigma});

    Gjfa invhom{{q, r}, semidyck_sigma,
                {{q, "a1.a1bar"_w, q}, {q, "a2.a2bar"_w, q}, {q, "a1bar.a1"_w, r}}, q, {r}};
    out.push_back({"invhom_m", EntryKind::gjfa, invhom,
                   "Theorem 4: GJFA M with L(M) = D2 a1bar D2 a1 D2 (inverse homomorphism)", semidyck_sigma});

    out.push_back({"dyck_gjfa", EntryKind::gjfa,
                   insert_star_gjfa(finite_gjfa(LangSet{Word{}}, dyck_sigma), LangSet{dyck_pair()}),
                   "Example 1(iii): Dyck language D = eps <-* a abar", dyck_sigma});

    out.push_back({"semidyck2_gjfa", EntryKind::gjfa,
                   insert_star_gjfa(finite_gjfa(LangSet{Word{}}, semidyck_sigma),
                                    LangSet{semi_dyck_pair(1), semi_dyck_pair(2)}),
                   "Example 1(iv): semi-Dyck language D2 = eps <-* {a1 a1bar, a2 a2bar}", semidyck_sigma});

    out.push_back({"sigma_star_ab", EntryKind::gjfa, sigma_star_gjfa(ab),
                   "Example 1(i): Sigma* = eps <-* Sigma over {a,b}", ab});

    out.push_back({"sigma_ab_sigma", EntryKind::gjfa, insert_gjfa(sigma_star_gjfa(ab), LangSet{"a.b"_w}),
                   "Example 1(ii): Sigma* ab Sigma* = Sigma* <- ab over {a,b}", ab});

    out.push_back({"unitary_ab_c", EntryKind::gjfa, unitary("a.b"_w, LangSet{"c"_w}),
                   "Example 1(v): unitary language ab <-* c (Definition 2)", abc});

    out.push_back({"ab_star", EntryKind::predicate, Membership(predicates::ab_star),
                   "Lemma: {ab}* is not a GJFA language", ab});
    out.push_back({"dyck_balance", EntryKind::predicate, Membership(predicates::dyck_balance),
                   "Example 1(iii): Dyck membership by counter", dyck_sigma});
    out.push_back({"semidyck2_balance", EntryKind::predicate, Membership(predicates::semidyck2_balance),
                   "Example 1(iv): semi-Dyck D2 membership by stack", semidyck_sigma});
    out.push_back({"equal_counts", EntryKind::predicate, Membership(predicates::equal_counts),
                   "Example 2: |w|_a = |w|_b = |w|_c", abc});

    Homomorphism phi{{{Symbol("a"), "a1bar.a2"_w}, {Symbol("b"), "a2bar.a1"_w}}};
    out.push_back({"phi_thm4", EntryKind::homomorphism, phi,
                   "Theorem 4: phi(a) = a1bar a2, phi(b) = a2bar a1", ab});

    const StateId c("c");
    GcInsSystem dyck_gcis{dyck_sigma, {c}, {{c, InsRule{Word{}, dyck_pair(), Word{}}, c}}, LangSet{Word{}}, c, c};
    out.push_back({"dyck_gcis", EntryKind::gcis, dyck_gcis,
                   "Dyck language as a one-component ins_2^{0,0} system", dyck_sigma});
    return out;
}

} // namespace detail

inline const std::vector<CorpusEntry>& corpus_catalog()
{
    static const std::vector<CorpusEntry> catalog = detail::build_catalog();
    return catalog;
}

inline const CorpusEntry& corpus_get(std::string_view name)
{
    for (const auto& e : corpus_catalog())
        if (e.name == name)
            return e;
    throw Error(Errc::unknown_name, "no corpus entry named '" + std::string(name) + "'");
}

struct CorpusListing {
    std::string name;
    EntryKind kind;
    std::string citation;
};

inline std::vector<CorpusListing> corpus_list()
{
    std::vector<CorpusListing> out;
    for (const auto& e : corpus_catalog())
        out.push_back({e.name, e.kind, e.citation});
    return out;
}

/// Every GJFA entry, in catalog order.
inline std::vector<const CorpusEntry*> corpus_automata()
{
    std::vector<const CorpusEntry*> out;
    for (const auto& e : corpus_catalog())
        if (e.kind == EntryKind::gjfa)
            out.push_back(&e);
    return out;
}

} // namespace gjfa
