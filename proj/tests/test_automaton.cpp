#include "support/testing.hpp"

#include "tlc/automaton.hpp"
#include "tlc/automaton_io.hpp"
#include "tlc/error.hpp"
#include "tlc/regex.hpp"

#include <catch_amalgamated.hpp>

#include <sstream>

using namespace tlc;
using tlc::testing::words_up_to;

namespace {

struct Letters {
    SymbolTable symbols;
    SymbolId a, b, c;
    Alphabet ab, abc;

    Letters() : a(symbols.intern("a")), b(symbols.intern("b")), c(symbols.intern("c")) {
        ab = make_alphabet({a, b});
        abc = make_alphabet({a, b, c});
    }

    [[nodiscard]] Automaton re(std::string_view text, const Alphabet& sigma) const {
        return from_regex(parse_regex(text, symbols, sigma, RegexSyntax{true}), sigma, &symbols);
    }
    [[nodiscard]] Automaton re(std::string_view text) const { return re(text, ab); }
    [[nodiscard]] Word w(std::string_view text) const {
        Word out;
        for (char ch : text) {
            out.push_back(symbols.find(std::string(1, ch)));
        }
        return out;
    }
};

bool has_factor_aa(const Word& w, SymbolId a) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == a && w[i + 1] == a) {
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("symbol table round-trips names") {
    SymbolTable t;
    const SymbolId x = t.intern("x");
    CHECK(t.intern("x") == x);
    CHECK(t.name(x) == "x");
    CHECK(t.find("y") == kEpsilon);
    CHECK(t.contains("x"));
    CHECK(t.size() == 1);
}

TEST_CASE("from_regex denotations") {
    Letters L;
    const Automaton ab_star = L.re("a b*");
    CHECK(accepts(ab_star, L.w("a")));
    CHECK(accepts(ab_star, L.w("ab")));
    CHECK(accepts(ab_star, L.w("abb")));
    CHECK_FALSE(accepts(ab_star, L.w("")));
    CHECK_FALSE(accepts(ab_star, L.w("b")));

    const Automaton not_a_star = L.re("~(a*)");
    CHECK(accepts(not_a_star, L.w("b")));
    CHECK(accepts(not_a_star, L.w("ab")));
    CHECK_FALSE(accepts(not_a_star, L.w("")));
    CHECK_FALSE(accepts(not_a_star, L.w("a")));

    const Automaton no_aa = L.re("(a|b)* & ~( (a|b)* a a (a|b)* )");
    for (const Word& w : words_up_to(L.ab, 6)) {
        CHECK(accepts(no_aa, w) == !has_factor_aa(w, L.a));
    }
}

TEST_CASE("from_regex names the offending atom") {
    Letters L;
    const Regex r = Regex::concat({Regex::atom(L.a), Regex::atom(L.c)});
    try {
        (void)from_regex(r, L.ab, &L.symbols);
        FAIL("expected AlphabetError");
    } catch (const AlphabetError& e) {
        CHECK(std::string(e.what()).find("'c'") != std::string::npos);
    }
}

TEST_CASE("determinize preserves the language") {
    Letters L;
    const Automaton nfa = L.re("(a|b)*a");
    const Automaton dfa = determinize(nfa);
    CHECK(dfa.is_deterministic());
    for (const Word& w : words_up_to(L.ab, 6)) {
        CHECK(accepts(dfa, w) == testing::simulate(nfa, w));
    }

    const Automaton again = determinize(dfa);
    CHECK(again.is_deterministic());
    CHECK(equivalent(again, dfa));

    const Automaton none = determinize(empty_language(L.ab));
    CHECK(none.is_deterministic());
    CHECK(none.final_states().empty());
}

TEST_CASE("determinize agrees with NFA simulation on random automata") {
    Letters L;
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        const Automaton nfa = testing::random_nfa(rng, L.abc, 5);
        const Automaton dfa = determinize(nfa);
        REQUIRE(dfa.is_deterministic());
        for (const Word& w : words_up_to(L.abc, 4)) {
            REQUIRE(accepts(dfa, w) == testing::simulate(nfa, w));
        }
    }
}

TEST_CASE("minimize") {
    Letters L;
    SECTION("equivalent DFAs of different size minimize to the same count") {
        Automaton one(L.ab);
        one.set_final(0);
        one.add_transition(0, L.a, 0);

        Automaton three(L.ab);
        three.add_state();
        three.add_state();
        for (StateId q = 0; q < 3; ++q) {
            three.set_final(q);
            three.add_transition(q, L.a, (q + 1) % 3);
        }
        CHECK(minimize(one).num_states() == minimize(three).num_states());
        CHECK(minimize(three).num_states() == 1);
    }
    SECTION("empty language") {
        const Automaton m = minimize(empty_language(L.ab));
        CHECK(m.num_states() == 1);
        CHECK(m.final_states().empty());
        CHECK(is_empty(m));
    }
    SECTION("state counts match Brzozowski on random NFAs") {
        std::mt19937 rng(11);
        for (int i = 0; i < 100; ++i) {
            const Automaton nfa = testing::random_nfa(rng, L.abc, 6);
            const Automaton m = minimize(determinize(nfa));
            const Automaton reference = testing::brzozowski(nfa);
            INFO("case " << i);
            REQUIRE(m.num_states() == reference.num_states());
            REQUIRE(equivalent(m, nfa));
            REQUIRE(minimize(m).num_states() == m.num_states());
        }
    }
}

TEST_CASE("Boolean and regular operations") {
    Letters L;
    const Automaton sigma_star = universal_language(L.ab);
    CHECK(is_empty(difference(sigma_star, sigma_star)));

    const Automaton ab = intersect(L.re("a*b"), L.re("a b*"));
    CHECK(enumerate(ab, 5) == std::vector<Word>{L.w("ab")});

    CHECK(equivalent(L.re("(a|b)*"), complement(empty_language(L.ab), L.ab)));
    CHECK(accepts(L.re("a*"), Word{}));
    CHECK(enumerate(L.re("a b*"), 3) == std::vector<Word>{L.w("a"), L.w("ab"), L.w("abb")});
}

TEST_CASE("Boolean semantics hold word by word on random languages") {
    Letters L;
    std::mt19937 rng(3);
    const auto words = words_up_to(L.abc, 5);
    for (int i = 0; i < 50; ++i) {
        const Automaton x = testing::random_nfa(rng, L.abc, 4);
        const Automaton y = testing::random_nfa(rng, L.abc, 4);
        const Automaton both = intersect(x, y);
        const Automaton either = unite(x, y);
        const Automaton only_x = difference(x, y);
        const Automaton not_x = complement(x, L.abc);
        const Automaton not_not_x = complement(not_x, L.abc);
        const Automaton xy = concat(x, y);
        const Automaton xs = star(x);
        for (const Word& w : words) {
            const bool in_x = testing::simulate(x, w);
            const bool in_y = testing::simulate(y, w);
            REQUIRE(accepts(both, w) == (in_x && in_y));
            REQUIRE(accepts(either, w) == (in_x || in_y));
            REQUIRE(accepts(only_x, w) == (in_x && !in_y));
            REQUIRE(accepts(not_x, w) == !in_x);
            REQUIRE(accepts(not_not_x, w) == in_x);

            bool split = false;
            for (std::size_t k = 0; k <= w.size() && !split; ++k) {
                const std::span<const SymbolId> span(w);
                split = testing::simulate(x, span.first(k)) && testing::simulate(y, span.subspan(k));
            }
            REQUIRE(accepts(xy, w) == split);
        }
        REQUIRE(accepts(xs, Word{}));
        REQUIRE(is_subset(x, xs));
    }
}

TEST_CASE("equivalence agrees with bounded enumeration") {
    Letters L;
    std::mt19937 rng(5);
    for (int i = 0; i < 30; ++i) {
        const Automaton x = minimize(testing::random_nfa(rng, L.ab, 3));
        const Automaton y = minimize(testing::random_nfa(rng, L.ab, 3));
        const std::size_t bound = x.num_states() * y.num_states();
        CHECK(equivalent(x, y) == (enumerate(x, bound) == enumerate(y, bound)));
        CHECK(equivalent(x, minimize(reverse(reverse(x)))));
    }
}

TEST_CASE("complement requires an alphabet covering the operand") {
    Letters L;
    CHECK_THROWS_AS(complement(L.re("a c", L.abc), L.ab), AlphabetError);
}

TEST_CASE("binary operations widen to the union alphabet") {
    Letters L;
    const Automaton x = symbol_language(L.a, make_alphabet({L.a}));
    const Automaton y = symbol_language(L.c, make_alphabet({L.c}));
    const Automaton u = unite(x, y);
    CHECK(u.alphabet() == make_alphabet({L.a, L.c}));
    CHECK(accepts(u, L.w("c")));
}

TEST_CASE("accepts rejects unknown symbols") {
    Letters L;
    CHECK_THROWS_AS(accepts(L.re("a"), L.w("c")), AlphabetError);
}

TEST_CASE("automaton invariants") {
    Letters L;
    Automaton a(L.ab);
    CHECK_THROWS_AS(a.add_transition(0, L.c, 0), AlphabetError);
    a.add_state();
    a.add_transition(0, L.a, 1);
    a.add_transition(0, L.a, 0);
    CHECK_FALSE(a.has_deterministic_structure());
    CHECK_THROWS(a.mark_deterministic());
}

TEST_CASE("text dump round-trips") {
    Letters L;
    std::mt19937 rng(2);
    for (int i = 0; i < 20; ++i) {
        const Automaton a = testing::random_nfa(rng, L.abc, 4);
        std::stringstream text;
        write_automaton(text, a, L.symbols);
        SymbolTable copy = L.symbols;
        const Automaton back = read_automaton(text, copy);
        CHECK(equivalent(a, back));
        CHECK(back.num_states() == a.num_states());
    }
}

TEST_CASE("text dump format") {
    Letters L;
    const Automaton a = minimize(L.re("a b"));
    std::ostringstream text;
    write_automaton(text, a, L.symbols);
    CHECK(text.str() ==
          "states 3 initial 0 alphabet 2\n"
          "sym 0 a\n"
          "sym 1 b\n"
          "0 0 1\n"
          "1 1 2\n"
          "final 2\n");
}

TEST_CASE("malformed dumps are rejected") {
    std::istringstream missing_header("sym 0 a\n");
    CHECK_THROWS_AS(read_automaton(missing_header), Error);
    std::istringstream bad_state("states 1 initial 0 alphabet 1\nsym 0 a\n0 0 5\n");
    CHECK_THROWS_AS(read_automaton(bad_state), Error);
}

TEST_CASE("dot export lists every state") {
    Letters L;
    std::ostringstream dot;
    write_dot(dot, minimize(L.re("a b")), L.symbols);
    const std::string s = dot.str();
    CHECK(s.find("digraph") != std::string::npos);
    CHECK(s.find("doublecircle") != std::string::npos);
}
