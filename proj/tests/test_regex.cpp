#include "support/testing.hpp"

#include "tlc/error.hpp"
#include "tlc/regex.hpp"

#include <catch_amalgamated.hpp>

using namespace tlc;

namespace {

struct Names {
    SymbolTable symbols;
    SymbolId a = symbols.intern("a");
    SymbolId b = symbols.intern("b");
    SymbolId ab = symbols.intern("ab");
    SymbolId c = symbols.intern("c");
    Alphabet sigma = make_alphabet({a, b, ab, c});

    [[nodiscard]] Regex parse(std::string_view text, RegexSyntax syntax = {}) const {
        return parse_regex(text, symbols, sigma, syntax);
    }
};

}  // namespace

TEST_CASE("runs of symbol characters split by longest match") {
    Names n;
    Word out;
    REQUIRE(split_symbols("abab", n.symbols, n.sigma, out));
    CHECK(out == Word{n.ab, n.ab});
    out.clear();
    REQUIRE(split_symbols("abc", n.symbols, n.sigma, out));
    CHECK(out == Word{n.ab, n.c});
    out.clear();
    std::size_t failed = 0;
    CHECK_FALSE(split_symbols("abz", n.symbols, n.sigma, out, &failed));
    CHECK(failed == 2);
}

TEST_CASE("postfix operators bind to the last atom of a run") {
    Names n;
    CHECK(n.parse("c a*") == Regex::concat({Regex::atom(n.c), Regex::star(Regex::atom(n.a))}));
    CHECK(n.parse("ca*") == n.parse("c a*"));
    CHECK(n.parse("(c a)*") == Regex::star(Regex::concat({Regex::atom(n.c), Regex::atom(n.a)})));
}

TEST_CASE("parser covers the user operators") {
    Names n;
    CHECK(n.parse("[]") == Regex::epsilon());
    CHECK(n.parse(".") == Regex::any());
    CHECK(n.parse("a | b") == Regex::alternation({Regex::atom(n.a), Regex::atom(n.b)}));
    CHECK(n.parse("a+") == Regex::plus(Regex::atom(n.a)));
    CHECK(n.parse("a?") == Regex::optional(Regex::atom(n.a)));
    CHECK(n.parse("  a   b ") == Regex::concat({Regex::atom(n.a), Regex::atom(n.b)}));
}

TEST_CASE("boolean operators only when enabled") {
    Names n;
    CHECK_THROWS_AS(n.parse("a & b"), Error);
    CHECK_THROWS_AS(n.parse("~a"), Error);
    const RegexSyntax full{true};
    CHECK(n.parse("a & b", full) == Regex::intersection(Regex::atom(n.a), Regex::atom(n.b)));
    CHECK(n.parse("a - b", full) == Regex::difference(Regex::atom(n.a), Regex::atom(n.b)));
    CHECK(n.parse("~a", full) == Regex::complement(Regex::atom(n.a)));
}

TEST_CASE("syntax errors are reported") {
    Names n;
    CHECK_THROWS_AS(n.parse("(a"), Error);
    CHECK_THROWS_AS(n.parse("a)"), Error);
    CHECK_THROWS_AS(n.parse("*"), Error);
    CHECK_THROWS_AS(n.parse("z"), Error);
    CHECK_THROWS_AS(n.parse("a |"), Error);
}

TEST_CASE("printing round-trips") {
    Names n;
    for (const char* text : {"a b*", "(a | b) c", "ab+ a?", "[]", ".", "(a b)* | c", "((a | b)*)?"}) {
        const Regex r = n.parse(text);
        INFO(text << " printed as " << to_string(r, n.symbols));
        CHECK(n.parse(to_string(r, n.symbols)) == r);
    }
}

TEST_CASE("atoms and literals") {
    Names n;
    CHECK(n.parse("a (b | c)*").atoms() == make_alphabet({n.a, n.b, n.c}));
    Word w;
    CHECK(n.parse("ab c").as_literal(w));
    CHECK(w == Word{n.ab, n.c});
    CHECK_FALSE(n.parse("a*").as_literal(w));
    CHECK(n.parse("[]").as_literal(w));
    CHECK(w.empty());
}

TEST_CASE("calculus nodes compile") {
    Names n;
    const SymbolId zero = n.symbols.intern("0");
    const Alphabet with_zero = alphabet_union(n.sigma, {zero});
    const Regex r = Regex::intro({zero}, n.parse("a b"));
    const Automaton m = from_regex(r, with_zero);
    CHECK(accepts(m, Word{n.a, zero, n.b}));
    CHECK_FALSE(accepts(m, Word{n.b, n.a}));

    const Regex s = Regex::sub(Regex::atom(n.c), Word{n.a}, n.parse("a b"));
    const Automaton ms = from_regex(s, n.sigma);
    CHECK(accepts(ms, Word{n.c, n.b}));
    CHECK(accepts(ms, Word{n.a, n.b}));
    CHECK_THROWS_AS(Regex::sub(Regex::atom(n.c), Word{}, n.parse("a")), Error);
}
