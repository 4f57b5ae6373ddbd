#include "gjfa/gjfa.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace gjfa;

namespace {

LangSet L(std::initializer_list<std::string_view> words) { return LangSet::parse(words); }

const std::set<Symbol> kAb = symbols_of({"a", "b"});
const std::set<Symbol> kDyck = symbols_of({"a", "abar"});

LangSet random_set(std::mt19937& rng, const std::set<Symbol>& alphabet, std::size_t max_words, std::size_t max_len)
{
    std::vector<Symbol> letters(alphabet.begin(), alphabet.end());
    std::uniform_int_distribution<std::size_t> count(0, max_words), len(0, max_len), pick(0, letters.size() - 1);
    LangSet out;
    for (std::size_t i = count(rng); i > 0; --i) {
        std::vector<Symbol> w;
        for (std::size_t j = len(rng); j > 0; --j)
            w.push_back(letters[pick(rng)]);
        out.insert(Word(std::move(w)));
    }
    return out;
}

} // namespace

TEST_CASE("insert")
{
    CHECK(insert(L({"a.b"}), L({"c"})) == L({"c.a.b", "a.c.b", "a.b.c"}));
    CHECK(insert(L({"eps"}), L({"a.abar"})) == L({"a.abar"}));

    const LangSet expected = oracle::insertion_by_deletion(L({"a.abar"}), L({"abar.a"}), kDyck, 4);
    CHECK(expected == L({"abar.a.a.abar", "a.abar.a.abar", "a.abar.abar.a"}));
    CHECK(insert(L({"a.abar"}), L({"abar.a"})) == expected);

    CHECK(insert(L({"a.b"}).with_bound(2), L({"c"})).bound() == 3);
    CHECK(insert(L({"a.b"}), LangSet{}).empty());
}

TEST_CASE("insert_iter")
{
    CHECK(insert_iter(L({"eps"}), L({"a.abar"}), 0) == L({"eps"}));
    CHECK(insert_iter(L({"eps"}), L({"a.abar"}), 1) == L({"a.abar"}));
    const LangSet twice = oracle::insertion_by_deletion(L({"a.abar"}), L({"a.abar"}), kDyck, 4);
    CHECK(twice == L({"a.abar.a.abar", "a.a.abar.abar"}));
    CHECK(insert_iter(L({"eps"}), L({"a.abar"}), 2) == twice);
}

TEST_CASE("insert_star_bounded")
{
    const LangSet dyck4 = insert_star_bounded(L({"eps"}), L({"a.abar"}), 4);
    CHECK(dyck4 == oracle::star_by_deletion(L({"eps"}), L({"a.abar"}), kDyck, 4));
    CHECK(dyck4 == L({"eps", "a.abar", "a.abar.a.abar", "a.a.abar.abar"}));
    CHECK(dyck4.bound() == 4);

    CHECK(insert_star_bounded(L({"eps"}), L({"a"}), 3) == L({"eps", "a", "a.a", "a.a.a"}));
    CHECK(insert_star_bounded(L({"a.b"}), LangSet{}, 10) == L({"a.b"}));
    // ε in K is a no-op and must not stall the fixpoint
    CHECK(insert_star_bounded(L({"eps"}), L({"eps", "a"}), 2) == L({"eps", "a", "a.a"}));
}

TEST_CASE("insert_star_bounded agrees with deletion-side membership on random sets")
{
    std::mt19937 rng(20261014);
    for (int trial = 0; trial < 40; ++trial) {
        LangSet l = random_set(rng, kAb, 3, 3);
        LangSet k = random_set(rng, kAb, 2, 2);
        const std::size_t bound = 6;
        INFO("L = " << l << ", K = " << k);
        LangSet star = insert_star_bounded(l, k, bound);
        CHECK(star == oracle::star_by_deletion(l, k, kAb, bound));
        // monotone: L ⊆ L ←* K
        for (const auto& w : l)
            CHECK(star.contains(w));
    }
}

TEST_CASE("eval_composition")
{
    CHECK(eval_composition(Composition{}) == L({"eps"}));
    CHECK(eval_composition(Composition{{"a.abar"_w}}) == L({"a.abar"}));
    // labels v1 = abar.a, v2 = a.abar: ε ← a.abar ← abar.a
    CHECK(eval_composition(Composition{{"abar.a"_w, "a.abar"_w}}) ==
          L({"abar.a.a.abar", "a.abar.a.abar", "a.abar.abar.a"}));
    CHECK(Composition{{"a"_w, "a.b.c"_w}}.degree() == 3);
}

TEST_CASE("eval_composition matches repeated singleton insertion and sums lengths")
{
    std::mt19937 rng(7);
    std::vector<Symbol> letters(kAb.begin(), kAb.end());
    for (int trial = 0; trial < 30; ++trial) {
        Composition c;
        std::size_t total = 0;
        for (std::size_t i = rng() % 4; i > 0; --i) {
            std::vector<Symbol> v;
            for (std::size_t j = rng() % 3; j > 0; --j)
                v.push_back(letters[rng() % letters.size()]);
            total += v.size();
            c.labels.emplace_back(std::move(v));
        }
        LangSet by_hand{Word{}};
        for (std::size_t i = c.labels.size(); i > 0; --i)
            by_hand = oracle::insertion_by_deletion(by_hand, LangSet{c.labels[i - 1]}, kAb, total);
        LangSet got = eval_composition(c);
        CHECK(got == by_hand);
        for (const auto& w : got)
            CHECK(w.size() == total);
    }
}

TEST_CASE("reverse_set and reversal of insertion")
{
    CHECK(reverse_set(L({"a.b", "b.a"})) == L({"b.a", "a.b"}));
    CHECK(reverse_set(L({"a.abar.abar.a"})) == L({"a.abar.abar.a"}));
    CHECK(reverse_set(insert(L({"a.b"}), L({"c"}))) == L({"b.a.c", "b.c.a", "c.b.a"}));
    CHECK(insert(reverse_set(L({"a.b"})), reverse_set(L({"c"}))) == L({"b.a.c", "b.c.a", "c.b.a"}));

    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        LangSet l = random_set(rng, kAb, 3, 4), k = random_set(rng, kAb, 3, 3);
        CHECK(reverse_set(insert(l, k)) == insert(reverse_set(l), reverse_set(k)));
        CHECK(reverse_set(reverse_set(l)) == l);
    }
}

TEST_CASE("shuffle_sets")
{
    const LangSet s = shuffle_sets(L({"a.b"}), L({"c.d"}), 4);
    CHECK(s == L({"a.c.b.d", "a.c.d.b", "c.a.b.d", "a.b.c.d", "c.d.a.b", "c.a.d.b"}));
    CHECK(s.size() == 6);

    const LangSet some = L({"a", "a.b", "b.b.a"});
    CHECK(shuffle_sets(L({"eps"}), some, 8) == some);

    const LangSet d2 = semi_dyck_bounded(2, 4);
    const Word proof = "a1.a1.a2.a2.a1bar.a1bar.a2bar.a2bar"_w;
    CHECK(oracle::in_shuffle(proof, d2, d2));
    CHECK(shuffle_sets(d2, d2, 8).contains(proof));
}

TEST_CASE("shuffle is commutative and matches the subset oracle")
{
    std::mt19937 rng(3);
    const auto abc = symbols_of({"a", "b", "c"});
    for (int trial = 0; trial < 25; ++trial) {
        LangSet k = random_set(rng, abc, 3, 3), l = random_set(rng, abc, 3, 3);
        LangSet kl = shuffle_sets(k, l, 6);
        CHECK(kl == shuffle_sets(l, k, 6));
        LangSet expected;
        for (const auto& w : oracle::all_words(abc, 6))
            if (oracle::in_shuffle(w, k, l))
                expected.insert(w);
        CHECK(kl == expected);
    }
}

TEST_CASE("homomorphisms")
{
    const Homomorphism& phi = corpus_get("phi_thm4").homomorphism();
    CHECK(hom_image(phi, L({"a.b"})) == L({"a1bar.a2.a2bar.a1"}));
    CHECK(hom_image(phi, L({"eps"})) == L({"eps"}));
    CHECK(hom_image(phi, L({"a"})) == L({"a1bar.a2"}));
    CHECK_THROWS_AS(phi("c"_w), Error);

    CHECK(hom_preimage_bounded(phi, [](const Word&) { return false; }, 4).empty());
    CHECK(hom_preimage_bounded(phi, [](const Word&) { return true; }, 2) ==
          L({"eps", "a", "b", "a.a", "a.b", "b.a", "b.b"}));
}

TEST_CASE("hom_preimage_bounded of the inverse-homomorphism automaton")
{
    const Homomorphism& phi = corpus_get("phi_thm4").homomorphism();
    const Gjfa& m = corpus_get("invhom_m").gjfa();
    // exhaustive over D2 a1bar D2 a1 D2; ε is missing because q is not final
    LangSet expected;
    for (const auto& v : oracle::all_words(phi.domain(), 6))
        if (oracle::in_d2_a1bar_d2_a1_d2(phi(v)))
            expected.insert(v);
    CHECK(expected == L({"a.b", "a.b.a.b", "a.b.a.b.a.b"}));
    CHECK(hom_preimage_bounded(phi, jump_membership(m), 6) == expected);
}

TEST_CASE("perm_closure")
{
    CHECK(perm_closure(L({"a.b"})) == L({"a.b", "b.a"}));
    CHECK(perm_closure(L({"a.b.c"})).size() == 6);
    CHECK(perm_closure(L({"eps"})) == L({"eps"}));
    CHECK(perm_closure(L({"a.a.b"})) == L({"a.a.b", "a.b.a", "b.a.a"}));

    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        LangSet l = random_set(rng, symbols_of({"a", "b", "c"}), 3, 4);
        LangSet p = perm_closure(l);
        CHECK(perm_closure(p) == p);
        for (const auto& w : p) {
            bool shares = false;
            for (const auto& u : l)
                shares = shares || oracle::parikh(u) == oracle::parikh(w);
            CHECK(shares);
        }
    }
}

TEST_CASE("bounded generators")
{
    CHECK(dyck_bounded(2) == L({"eps", "a.abar"}));
    CHECK(semi_dyck_bounded(2, 2) == L({"eps", "a1.a1bar", "a2.a2bar"}));
    CHECK(sigma_star_bounded(kAb, 1) == L({"eps", "a", "b"}));
    CHECK(sigma_star_bounded(kAb, 4).size() == 31);
    CHECK_THROWS_AS(semi_dyck_bounded(0, 2), Error);
}

TEST_CASE("dyck_bounded is exactly the balanced words")
{
    for (std::size_t m : {0u, 3u, 8u, 10u}) {
        const LangSet d = dyck_bounded(m);
        for (const auto& w : d)
            CHECK(oracle::balanced(w, "a", "abar"));
        for (const auto& w : oracle::all_words(kDyck, m))
            if (oracle::balanced(w, "a", "abar"))
                CHECK(d.contains(w));
    }
    // Catalan numbers: 1 + 1 + 2 + 5 + 14 words up to length 8
    CHECK(dyck_bounded(8).size() == 23);
}

TEST_CASE("semi_dyck_bounded is exactly the cancellable words")
{
    const auto sigma = symbols_of({"a1", "a1bar", "a2", "a2bar"});
    const LangSet d = semi_dyck_bounded(2, 6);
    LangSet expected;
    for (const auto& w : oracle::all_words(sigma, 6))
        if (oracle::semi_dyck_by_cancellation(w))
            expected.insert(w);
    CHECK(d == expected);
}
