#pragma once

#include "tlc/automaton.hpp"
#include "tlc/error.hpp"
#include "tlc/regex.hpp"
#include "tlc/symbol_table.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tlc {

/// Reserved names: the space symbol, the partition boundary and the centre placeholder.
inline constexpr std::string_view kZeroName = "0";
inline constexpr std::string_view kBoundaryName = "w";
inline constexpr std::string_view kPlaceholderName = "t";

[[nodiscard]] bool is_reserved_name(std::string_view name);

/// Tapes 0..lexical-1 are lexical, the remaining `surface` tapes are surface.
struct TapeConfig {
    std::size_t lexical = 1;
    std::size_t surface = 1;
    std::vector<Alphabet> alphabets;  // one per tape

    [[nodiscard]] std::size_t tapes() const { return lexical + surface; }
    [[nodiscard]] bool is_lexical(std::size_t tape) const { return tape < lexical; }

    friend bool operator==(const TapeConfig&, const TapeConfig&) = default;
};

/// A per-tape field of a rule. An omitted field is unconstrained: sigma* of its tape.
using Field = std::optional<Regex>;

/// One word per tape.
using StringTuple = std::vector<Word>;

/// Context restriction rule (l, c, r). Contexts hold the user expressions;
/// the implicit sigma* prefix of left contexts and suffix of right contexts
/// is added when they are compiled or matched.
struct CRRule {
    std::string name;
    int line = 0;
    std::vector<Field> left;             // n fields
    std::vector<StringTuple> centre;     // finite set of literal tuples
    std::vector<Field> right;            // n fields

    friend bool operator==(const CRRule& a, const CRRule& b) {
        return a.name == b.name && a.left == b.left && a.centre == b.centre && a.right == b.right;
    }
};

/// Surface coercion rule (l, c_l, c_s, r).
struct SCRule {
    std::string name;
    int line = 0;
    std::vector<Field> left;             // n fields
    std::vector<Field> lexical_centre;   // N fields
    std::vector<Field> surface_centre;   // M fields
    std::vector<Field> right;            // n fields

    friend bool operator==(const SCRule& a, const SCRule& b) {
        return a.name == b.name && a.left == b.left && a.lexical_centre == b.lexical_centre &&
               a.surface_centre == b.surface_centre && a.right == b.right;
    }
};

struct Grammar {
    SymbolTable symbols;
    TapeConfig tapes;
    std::vector<CRRule> cr_rules;
    std::vector<SCRule> sc_rules;

    /// Name of a word on one tape, symbols separated by spaces when any name is longer than one character.
    [[nodiscard]] std::string format_word(std::span<const SymbolId> word) const;
    [[nodiscard]] std::string format_tuple(const StringTuple& tuple) const;
};

[[nodiscard]] bool operator==(const Grammar& a, const Grammar& b);

/// Parses the line-oriented grammar format:
///
///     tapes lexical 1 surface 1
///     alphabet 1 : V B c d
///     alphabet 2 : V b c d
///     rule R1 =>  lex : V _ B _   surf : V _ b _
///     rule R3 <=> lex : c _ [] _ d   surf : c _ b _ d
///
/// `<=>` rules are expanded into one CR rule and one SC rule. Throws
/// GrammarError (with a line number) on the first error; warnings are
/// appended to `warnings` when given.
[[nodiscard]] Grammar parse_grammar(std::string_view text, std::vector<Diagnostic>* warnings = nullptr);

/// Prints a grammar so that parse_grammar(print_grammar(g)) == g. Composite
/// rules come out as their CR and SC halves.
[[nodiscard]] std::string print_grammar(const Grammar& g);

/// Structural checks that need the whole grammar: at least one CR rule,
/// pairwise disjoint-or-equal centres, and symbols that no centre uses.
[[nodiscard]] std::vector<Diagnostic> validate(const Grammar& g);

/// Parses a word for one tape, splitting symbol runs by longest match.
/// Throws tlc::Error on unknown symbols.
[[nodiscard]] Word parse_word(const Grammar& g, std::size_t tape, std::string_view text);

}  // namespace tlc
