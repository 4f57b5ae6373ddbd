#include "gjfa/gjfa.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

using namespace gjfa;

namespace {

LangSet L(std::initializer_list<std::string_view> words) { return LangSet::parse(words); }

const Gjfa& thm1() { return corpus_get("thm1_m").gjfa(); }
const Gjfa& example2() { return corpus_get("equal_counts_jfa").gjfa(); }

} // namespace

TEST_CASE("delete_successors")
{
    const StateId q("q"), q0("q0"), q1("q1");
    Gjfa loop_only = thm1();
    loop_only.rules.erase({q, "a.abar"_w, StateId("r")});
    // abar.a occurs only at position 0 of abar.a.a.abar
    CHECK(delete_successors(loop_only, {q, "abar.a.a.abar"_w}) == std::set<Configuration>{{q, "a.abar"_w}});
    // a.abar occurs at position 2
    CHECK(delete_successors(thm1(), {q, "abar.a.a.abar"_w}) ==
          std::set<Configuration>{{q, "a.abar"_w}, {StateId("r"), "abar.a"_w}});
    CHECK(delete_successors(loop_only, {q, "abar.a.abar.a"_w}) == std::set<Configuration>{{q, "abar.a"_w}});

    CHECK(delete_successors(example2(), {q0, "a.b.c"_w}) == std::set<Configuration>{{q1, "b.c"_w}});
    CHECK(delete_successors(example2(), {q0, "b.c"_w}).empty());

    Gjfa eps_rule{{q, q1}, symbols_of({"a"}), {{q, Word{}, q1}}, q, {q1}};
    CHECK(delete_successors(eps_rule, {q, "a"_w}) == std::set<Configuration>{{q1, "a"_w}});
}

TEST_CASE("jump_accepts on the equal-counts JFA")
{
    CHECK(jump_accepts(example2(), "a.b.c"_w).accepted);
    CHECK_FALSE(jump_accepts(example2(), "a.b"_w).accepted);
    CHECK(jump_accepts(example2(), "c.b.a"_w).accepted);
    CHECK(jump_accepts(example2(), Word{}).accepted);
    CHECK(jump_accepts(example2(), "c.c.a.b.b.a"_w).accepted);
}

TEST_CASE("acceptance witnesses replay to the input word")
{
    for (const auto* entry : corpus_automata()) {
        const Gjfa& m = entry->gjfa();
        for (const auto& w : enumerate_language(m, 6)) {
            auto result = jump_accepts(m, w);
            INFO(entry->name << " " << w);
            REQUIRE(result.accepted);
            REQUIRE(result.witness);
            CHECK(result.witness->replay() == w);
            if (auto p = result.witness->path())
                CHECK(p->is_accepting(m));
            else
                CHECK((w.empty() && m.finals.contains(m.initial)));
        }
    }
}

TEST_CASE("generate_accepts")
{
    CHECK(generate_accepts(thm1(), "a.abar"_w));
    CHECK_FALSE(generate_accepts(thm1(), "abar.a"_w));
    CHECK_FALSE(generate_accepts(thm1(), Word{}));
    Gjfa final_start = thm1();
    final_start.finals.insert(StateId("q"));
    CHECK(generate_accepts(final_start, Word{}));
    CHECK(generate_accepts(example2(), "b.c.a"_w));
}

TEST_CASE("enumerate_language")
{
    const LangSet k1 = L({"a.abar"});
    const LangSet k2 = insert(k1, L({"abar.a"}));
    CHECK(enumerate_language(thm1(), 4) == set_union(k1, k2));
    CHECK(enumerate_language(thm1(), 4) == L({"a.abar", "abar.a.a.abar", "a.abar.a.abar", "a.abar.abar.a"}));

    CHECK(enumerate_language(example2(), 3) == L({"eps", "a.b.c", "a.c.b", "b.a.c", "b.c.a", "c.a.b", "c.b.a"}));

    Gjfa rule_free{{StateId("s")}, symbols_of({"a"}), {}, StateId("s"), {StateId("s")}};
    CHECK(enumerate_language(rule_free, 5) == L({"eps"}));
    rule_free.finals.clear();
    CHECK(enumerate_language(rule_free, 5).empty());
}

TEST_CASE("both semantics agree on every corpus automaton up to length 6")
{
    for (const auto* entry : corpus_automata()) {
        const Gjfa& m = entry->gjfa();
        for (const auto& w : oracle::all_words(m.alphabet, 6)) {
            INFO(entry->name << " " << w);
            CHECK(jump_accepts(m, w).accepted == generate_accepts(m, w));
        }
    }
}

TEST_CASE("enumeration equals the deletion sweep and is monotone in the bound")
{
    for (const auto* entry : corpus_automata()) {
        const Gjfa& m = entry->gjfa();
        INFO(entry->name);
        LangSet previous;
        for (std::size_t k = 0; k <= 6; ++k) {
            LangSet current = enumerate_language(m, k);
            CHECK(current == oracle::language_by_deletion(m, k));
            for (const auto& w : previous)
                CHECK(current.contains(w));
            previous = current;
        }
    }
}

TEST_CASE("epsilon-only automata terminate and accept by reachability")
{
    const StateId s("s"), t("t"), u("u");
    // ε-cycle s -> t -> s and a dead end u
    Gjfa cyclic{{s, t, u}, symbols_of({"a"}), {{s, Word{}, t}, {t, Word{}, s}}, s, {u}};
    CHECK_FALSE(jump_accepts(cyclic, Word{}).accepted);
    CHECK_FALSE(generate_accepts(cyclic, Word{}));
    CHECK(enumerate_language(cyclic, 4).empty());

    cyclic.rules.insert({t, Word{}, u});
    CHECK(jump_accepts(cyclic, Word{}).accepted);
    CHECK(generate_accepts(cyclic, Word{}));
    CHECK(enumerate_language(cyclic, 4) == L({"eps"}));
    CHECK_FALSE(jump_accepts(cyclic, "a"_w).accepted);
}
