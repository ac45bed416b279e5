#pragma once

#include "tlc/automaton.hpp"
#include "tlc/calculus.hpp"
#include "tlc/symbol_table.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace tlc {

/// Immutable regular-expression tree over interned symbols.
///
/// Besides the usual operators it carries the calculus operators Intro, Sub
/// and the per-tape product. Complement, difference and `any` are read
/// relative to the alphabet passed to from_regex.
class Regex {
public:
    enum class Kind {
        empty,
        epsilon,
        atom,
        any,
        concat,
        alternation,
        star,
        plus,
        optional,
        intersection,
        difference,
        complement,
        intro,
        sub,
        tuple_product,
    };

    struct TapeTerm;

    /// Defaults to the empty-string expression.
    Regex();

    static Regex empty();
    static Regex epsilon();
    static Regex atom(SymbolId symbol);
    static Regex any();
    static Regex word(std::span<const SymbolId> symbols);
    static Regex concat(std::vector<Regex> parts);
    static Regex alternation(std::vector<Regex> parts);
    static Regex star(Regex inner);
    static Regex plus(Regex inner);
    static Regex optional(Regex inner);
    static Regex intersection(Regex lhs, Regex rhs);
    static Regex difference(Regex lhs, Regex rhs);
    static Regex complement(Regex inner);
    static Regex intro(Alphabet inserted, Regex inner);
    static Regex sub(Regex replacement, Word target, Regex inner);
    static Regex tuple_product(std::vector<TapeTerm> tapes, TupleAlphabet pi);

    [[nodiscard]] Kind kind() const;
    [[nodiscard]] SymbolId symbol() const;
    [[nodiscard]] const std::vector<Regex>& children() const;
    /// Inserted symbols of an intro node.
    [[nodiscard]] const Alphabet& symbols() const;
    /// Replaced word of a sub node; children() = {replacement, inner}.
    [[nodiscard]] const Word& target() const;
    [[nodiscard]] const std::vector<TapeTerm>& tapes() const;
    [[nodiscard]] const TupleAlphabet& tuple_alphabet() const;

    /// Every atom symbol occurring in the tree (outside tuple products).
    [[nodiscard]] Alphabet atoms() const;
    /// Literal word when the tree denotes exactly one string built from
    /// atoms, epsilon and concatenation; false otherwise.
    [[nodiscard]] bool as_literal(Word& out) const;

    friend bool operator==(const Regex& a, const Regex& b);

private:
    struct Node;
    explicit Regex(std::shared_ptr<const Node> node);
    static std::shared_ptr<Node> make_node(Kind kind);
    static Regex with_children(Kind kind, std::vector<Regex> children);
    std::shared_ptr<const Node> node_;
};

struct Regex::TapeTerm {
    Regex expr;
    Alphabet alphabet;
};

/// Compiles expr into an automaton over alphabet. Throws AlphabetError naming
/// the first atom outside the alphabet (by name when names is given).
[[nodiscard]] Automaton from_regex(const Regex& expr, const Alphabet& alphabet, const SymbolTable* names = nullptr);

struct RegexSyntax {
    /// Accept `&` (intersection), `-` (difference) and prefix `~` (complement).
    bool boolean_operators = false;
};

/// Parses the textual form: symbol atoms, juxtaposition, `|`, postfix `*`
/// `+` `?`, parentheses, `[]` for the empty string and `.` for any symbol.
/// Runs of symbol characters are split by longest match against the names
/// of alphabet. Throws tlc::Error on syntax errors and unknown symbols.
[[nodiscard]] Regex parse_regex(std::string_view text, const SymbolTable& symbols, const Alphabet& alphabet,
                                RegexSyntax syntax = {});

/// Inverse of parse_regex for the user-level operators.
[[nodiscard]] std::string to_string(const Regex& expr, const SymbolTable& symbols);

/// Splits a run of symbol characters into alphabet names, longest match first.
/// Returns false if some position matches no name.
[[nodiscard]] bool split_symbols(std::string_view run, const SymbolTable& symbols, const Alphabet& alphabet,
                                 Word& out, std::size_t* failed_at = nullptr);

/// True for characters that may appear in a symbol name.
[[nodiscard]] bool is_symbol_char(char c);

}  // namespace tlc
