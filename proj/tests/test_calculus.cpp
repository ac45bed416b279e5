#include "support/testing.hpp"

#include "tlc/calculus.hpp"
#include "tlc/error.hpp"
#include "tlc/regex.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace tlc;
using tlc::testing::words_up_to;

namespace {

struct Fixture {
    SymbolTable symbols;
    SymbolId a = symbols.intern("a");
    SymbolId b = symbols.intern("b");
    SymbolId c = symbols.intern("c");
    SymbolId d = symbols.intern("d");
    SymbolId x = symbols.intern("x");
    SymbolId y = symbols.intern("y");
    SymbolId t = symbols.intern("t");
    SymbolId w = symbols.intern("w");
    SymbolId zero = symbols.intern("0");

    [[nodiscard]] Automaton re(std::string_view text, const Alphabet& sigma) const {
        return from_regex(parse_regex(text, symbols, sigma), sigma, &symbols);
    }
    [[nodiscard]] Word word(std::string_view text) const {
        Word out;
        for (char ch : text) {
            out.push_back(symbols.find(std::string(1, ch)));
        }
        return out;
    }
    [[nodiscard]] std::set<Word> language(const Automaton& m, std::size_t max_len) const {
        const auto all = enumerate(m, max_len);
        return {all.begin(), all.end()};
    }
};

Word delete_symbols(const Word& w, const Alphabet& removed) {
    Word out;
    for (SymbolId s : w) {
        if (!alphabet_contains(removed, s)) {
            out.push_back(s);
        }
    }
    return out;
}

// All results of optionally replacing each occurrence of `target` in `input`
// by one of `replacements`, occurrences chosen left to right without overlap.
void rewrite(const Word& input, std::size_t at, const Word& target, const std::vector<Word>& replacements,
             Word& prefix, std::set<Word>& out) {
    if (at == input.size()) {
        out.insert(prefix);
        return;
    }
    prefix.push_back(input[at]);
    rewrite(input, at + 1, target, replacements, prefix, out);
    prefix.pop_back();
    if (at + target.size() <= input.size() &&
        std::equal(target.begin(), target.end(), input.begin() + static_cast<std::ptrdiff_t>(at))) {
        for (const Word& r : replacements) {
            const std::size_t keep = prefix.size();
            prefix.insert(prefix.end(), r.begin(), r.end());
            rewrite(input, at + target.size(), target, replacements, prefix, out);
            prefix.resize(keep);
        }
    }
}

std::set<Word> rewrite_all(const std::vector<Word>& inputs, const Word& target, const std::vector<Word>& replacements,
                           std::size_t max_len) {
    std::set<Word> out;
    for (const Word& in : inputs) {
        std::set<Word> results;
        Word prefix;
        rewrite(in, 0, target, replacements, prefix, results);
        for (const Word& r : results) {
            if (r.size() <= max_len) {
                out.insert(r);
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("intro inserts symbols anywhere") {
    Fixture f;
    const Alphabet ab = make_alphabet({f.a, f.b});
    const Automaton m = intro({f.zero}, f.re("a b", ab));
    CHECK(accepts(m, f.word("ab")));
    CHECK(accepts(m, f.word("a0b")));
    CHECK(accepts(m, f.word("0a0b0")));
    CHECK_FALSE(accepts(m, f.word("ba")));
    CHECK_FALSE(accepts(m, f.word("a")));
    CHECK(m.alphabet() == make_alphabet({f.a, f.b, f.zero}));

    const Automaton base = f.re("(a|b)* a", ab);
    CHECK(equivalent(intro({}, base), base));
}

TEST_CASE("intro obeys the delete law") {
    Fixture f;
    const Alphabet ab = make_alphabet({f.a, f.b});
    const Alphabet with_zero = make_alphabet({f.a, f.b, f.zero});
    const Automaton base = f.re("(a b)*", ab);
    const Automaton m = intro({f.zero}, base);
    for (const Word& word : words_up_to(with_zero, 5)) {
        CHECK(accepts(m, word) == accepts(base, delete_symbols(word, {f.zero})));
    }
}

TEST_CASE("sub replaces single-symbol targets optionally") {
    Fixture f;
    const Alphabet sigma = make_alphabet({f.a, f.b, f.t, f.x, f.y});
    const Automaton xy = word_language(f.word("xy"), sigma);
    const Automaton atb = word_language(f.word("atb"), sigma);
    const SymbolId target[] = {f.t};
    CHECK(f.language(sub(xy, target, atb), 6) == std::set<Word>{f.word("atb"), f.word("axyb")});
}

TEST_CASE("sub with a boundary symbol") {
    Fixture f;
    const Alphabet sigma = make_alphabet({f.c, f.d, f.w});
    const Automaton ww = word_language(f.word("ww"), sigma);
    const SymbolId single[] = {f.w};
    CHECK(f.language(sub(ww, single, word_language(f.word("w"), sigma)), 6) ==
          std::set<Word>{f.word("w"), f.word("ww")});
    CHECK(f.language(sub(ww, single, word_language(f.word("cwd"), sigma)), 6) ==
          std::set<Word>{f.word("cwd"), f.word("cwwd")});
}

TEST_CASE("sub with a two-symbol target merges boundary pairs") {
    Fixture f;
    const Alphabet sigma = make_alphabet({f.c, f.d, f.w});
    const Automaton one = word_language(f.word("w"), sigma);
    const SymbolId pair[] = {f.w, f.w};
    CHECK(f.language(sub(one, pair, word_language(f.word("cwwd"), sigma)), 6) ==
          std::set<Word>{f.word("cwwd"), f.word("cwd")});
    // overlapping occurrences: www = w.ww = ww.w
    CHECK(f.language(sub(one, pair, word_language(f.word("www"), sigma)), 6) ==
          std::set<Word>{f.word("www"), f.word("ww")});
}

TEST_CASE("sub rejects an empty target") {
    Fixture f;
    const Alphabet sigma = make_alphabet({f.a});
    CHECK_THROWS_AS(sub(universal_language(sigma), std::span<const SymbolId>{}, universal_language(sigma)), Error);
}

TEST_CASE("sub agrees with a rewriting oracle") {
    Fixture f;
    const Alphabet sigma = make_alphabet({f.a, f.t, f.x});
    const Automaton source = f.re("a (t a)*", sigma);
    const Automaton replacement = f.re("x*", sigma);
    const SymbolId target[] = {f.t};
    const Automaton m = sub(replacement, target, source);

    // outputs of length <= 6 keep every a, so inputs need at most 6 a's
    const auto inputs = enumerate(source, 11);
    const auto replacements = enumerate(replacement, 6);
    CHECK(f.language(m, 6) == rewrite_all(inputs, {f.t}, replacements, 6));
}

TEST_CASE("sub output contains its input on random languages") {
    Fixture f;
    const Alphabet sigma = make_alphabet({f.a, f.b, f.t});
    std::mt19937 rng(17);
    for (int i = 0; i < 100; ++i) {
        const Automaton source = testing::random_nfa(rng, sigma, 4);
        const Automaton replacement = testing::random_nfa(rng, sigma, 3);
        const SymbolId target[] = {f.t};
        REQUIRE(is_subset(source, sub(replacement, target, source)));
    }
}

TEST_CASE("tuple product") {
    Fixture f;
    SECTION("single column") {
        TupleAlphabet pi(2);
        const SymbolId ab = f.symbols.intern("a:b");
        pi.add({ab, {f.a, f.b}});
        const Automaton tapes[] = {symbol_language(f.a, make_alphabet({f.a})), symbol_language(f.b, make_alphabet({f.b}))};
        const Automaton m = tuple_product(tapes, pi);
        CHECK(enumerate(m, 4) == std::vector<Word>{{ab}});
    }
    SECTION("projections force the column order") {
        TupleAlphabet pi(2);
        const SymbolId a0 = f.symbols.intern("a:0");
        const SymbolId zb = f.symbols.intern("0:b");
        pi.add({a0, {f.a, f.zero}});
        pi.add({zb, {f.zero, f.b}});
        const Alphabet az = make_alphabet({f.a, f.zero});
        const Alphabet bz = make_alphabet({f.b, f.zero});
        const Automaton tapes[] = {f.re("a 0", az), f.re("0 b", bz)};
        CHECK(enumerate(tuple_product(tapes, pi), 4) == std::vector<Word>{{a0, zb}});
    }
    SECTION("arity mismatch") {
        TupleAlphabet pi(2);
        const Automaton tapes[] = {universal_language(make_alphabet({f.a}))};
        CHECK_THROWS_AS(tuple_product(tapes, pi), Error);
    }
}

TEST_CASE("tuple product obeys the projection law") {
    Fixture f;
    const std::vector<Alphabet> sigma{make_alphabet({f.a, f.b, f.zero}), make_alphabet({f.c, f.zero})};
    std::mt19937 rng(23);
    for (int i = 0; i < 50; ++i) {
        TupleAlphabet pi(2);
        for (SymbolId p : sigma[0]) {
            for (SymbolId q : sigma[1]) {
                if (std::bernoulli_distribution(0.6)(rng)) {
                    pi.add({f.symbols.intern(f.symbols.name(p) + ":" + f.symbols.name(q)), {p, q}});
                }
            }
        }
        if (pi.size() == 0) {
            continue;
        }
        const Automaton tapes[] = {testing::random_nfa(rng, sigma[0], 3), testing::random_nfa(rng, sigma[1], 3)};
        const Automaton m = tuple_product(tapes, pi);
        for (const Word& word : words_up_to(pi.ids(), 4)) {
            Word first;
            Word second;
            for (SymbolId s : word) {
                first.push_back(pi.find(s)->components[0]);
                second.push_back(pi.find(s)->components[1]);
            }
            REQUIRE(accepts(m, word) == (testing::simulate(tapes[0], first) && testing::simulate(tapes[1], second)));
        }
    }
}
