#include "gjfa/gjfa.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace gjfa;

namespace {

LangSet L(std::initializer_list<std::string_view> words) { return LangSet::parse(words); }

LangSet words_satisfying(const std::set<Symbol>& alphabet, std::size_t max_len, const Membership& member)
{
    LangSet out;
    for (const auto& w : oracle::all_words(alphabet, max_len))
        if (member(w))
            out.insert(w);
    return out;
}

} // namespace

TEST_CASE("catalog contents")
{
    std::set<std::string> names;
    for (const auto& listing : corpus_list())
        CHECK(names.insert(listing.name).second);
    for (const char* required : {"equal_counts_jfa", "thm1_m", "invhom_m", "dyck_gjfa", "semidyck2_gjfa",
                                 "sigma_star_ab", "ab_star", "dyck_balance", "semidyck2_balance", "phi_thm4"})
        CHECK(names.contains(required));
    CHECK(corpus_get("thm1_m").kind == EntryKind::gjfa);
    CHECK(corpus_get("ab_star").kind == EntryKind::predicate);
    CHECK(corpus_get("phi_thm4").kind == EntryKind::homomorphism);
    CHECK(corpus_get("dyck_gcis").kind == EntryKind::gcis);
    CHECK(kind_name(EntryKind::homomorphism) == "homomorphism");
    for (const auto& e : corpus_catalog())
        CHECK_FALSE(e.citation.empty());
}

TEST_CASE("unknown names")
{
    try {
        corpus_get("nope");
        FAIL("expected unknown-name");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::unknown_name);
        CHECK(errc_name(e.code()) == "unknown-name");
    }
}

TEST_CASE("every corpus automaton is valid and uses its listed alphabet")
{
    for (const auto* e : corpus_automata()) {
        INFO(e->name);
        CHECK(validate(e->gjfa()).empty());
        CHECK(e->gjfa().alphabet == e->alphabet);
    }
    CHECK(validate(corpus_get("dyck_gcis").gcis()).empty());
}

TEST_CASE("thm1_m")
{
    const Gjfa& m = corpus_get("thm1_m").gjfa();
    CHECK(degree(m) == 2);
    CHECK(enumerate_language(m, 2) == L({"a.abar"}));
}

TEST_CASE("the inverse-homomorphism automaton accepts D2 a1bar D2 a1 D2")
{
    const auto& entry = corpus_get("invhom_m");
    const LangSet d2 = semi_dyck_bounded(2, 6);
    const LangSet expected =
        oracle::filter(oracle::concat(oracle::concat(oracle::concat(oracle::concat(d2, L({"a1bar"})), d2), L({"a1"})), d2), 6);
    CHECK(enumerate_language(entry.gjfa(), 6) == expected);
    CHECK(expected == words_satisfying(entry.alphabet, 6, oracle::in_d2_a1bar_d2_a1_d2));
}

TEST_CASE("Dyck and semi-Dyck automata agree with their predicates")
{
    const auto& dyck = corpus_get("dyck_gjfa");
    const Membership& balanced = corpus_get("dyck_balance").predicate();
    CHECK(enumerate_language(dyck.gjfa(), 10) == words_satisfying(dyck.alphabet, 10, balanced));
    CHECK(enumerate_language(dyck.gjfa(), 10) == dyck_bounded(10));

    const auto& semi = corpus_get("semidyck2_gjfa");
    const Membership& semi_member = corpus_get("semidyck2_balance").predicate();
    const LangSet semi_lang = enumerate_language(semi.gjfa(), 6);
    CHECK(semi_lang == words_satisfying(semi.alphabet, 6, semi_member));
    CHECK(semi_lang == words_satisfying(semi.alphabet, 6, oracle::semi_dyck_by_cancellation));
}

TEST_CASE("equal counts")
{
    const auto& entry = corpus_get("equal_counts_jfa");
    const auto count_oracle = [](const Word& w) {
        auto p = oracle::parikh(w);
        return p[Symbol("a")] == p[Symbol("b")] && p[Symbol("b")] == p[Symbol("c")];
    };
    const LangSet expected = words_satisfying(entry.alphabet, 9, count_oracle);
    CHECK(enumerate_language(entry.gjfa(), 9) == expected);
    CHECK(words_satisfying(entry.alphabet, 9, corpus_get("equal_counts").predicate()) == expected);
    CHECK(expected.size() == 1 + 6 + 90 + 1680);
}

TEST_CASE("Sigma-star variants and the unitary language")
{
    const auto ab = symbols_of({"a", "b"});
    CHECK(enumerate_language(corpus_get("sigma_star_ab").gjfa(), 5) == sigma_star_bounded(ab, 5));

    LangSet with_factor;
    for (const auto& w : oracle::all_words(ab, 5))
        for (std::size_t p = 0; p + 1 < w.size(); ++p)
            if (w.has_factor_at(p, "a.b"_w))
                with_factor.insert(w);
    CHECK(enumerate_language(corpus_get("sigma_ab_sigma").gjfa(), 5) == with_factor);

    // ab ←* c: erase every c and ab remains
    LangSet unitary_expected;
    for (const auto& w : oracle::all_words(symbols_of({"a", "b", "c"}), 5)) {
        std::vector<Symbol> kept;
        for (const auto& s : w)
            if (s.name() != "c")
                kept.push_back(s);
        if (Word(kept) == "a.b"_w)
            unitary_expected.insert(w);
    }
    CHECK(enumerate_language(corpus_get("unitary_ab_c").gjfa(), 5) == unitary_expected);
}

TEST_CASE("predicates")
{
    const Membership& ab_star = corpus_get("ab_star").predicate();
    CHECK(ab_star(Word{}));
    CHECK(ab_star("a.b.a.b"_w));
    CHECK_FALSE(ab_star("a.b.b.a"_w));
    CHECK_FALSE(ab_star("a"_w));
    CHECK_FALSE(corpus_get("dyck_balance").predicate()("abar.a"_w));
    CHECK(corpus_get("semidyck2_balance").predicate()("a1.a2.a2bar.a1bar"_w));
    CHECK_FALSE(corpus_get("semidyck2_balance").predicate()("a1.a2.a1bar.a2bar"_w));
}
