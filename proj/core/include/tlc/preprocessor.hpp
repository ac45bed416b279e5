#pragma once

#include "tlc/automaton.hpp"
#include "tlc/calculus.hpp"
#include "tlc/grammar.hpp"

#include <span>
#include <string>
#include <vector>

namespace tlc {

/// A same-length column: one component per tape, the space symbol for padding.
using Column = std::vector<SymbolId>;

/// A CR centre tuple padded with the space symbol on the right.
struct PaddedCentre {
    StringTuple source;
    std::vector<Column> columns;
    /// The columns as tuple-symbol ids; filled in by CompilationUnit.
    Word word;
    /// Indices into Grammar::cr_rules of the rules whose centre contains this tuple.
    std::vector<std::size_t> rules;
};

/// Right-pads every component with `zero` to the longest component length.
/// The all-empty tuple pads to zero columns.
[[nodiscard]] std::vector<Column> pad_centre(const StringTuple& centre, SymbolId zero);

/// One PaddedCentre per distinct CR centre tuple, in rule order. Throws
/// GrammarError when the grammar has no CR rules or validation reports errors.
[[nodiscard]] std::vector<PaddedCentre> build_D(const Grammar& g, SymbolId zero);

/// Intro_{0} on every tape followed by the product restricted to pi.
[[nodiscard]] Automaton izeros(std::span<const Automaton> per_tape, const TupleAlphabet& pi, SymbolId zero);

/// Everything the compiler needs from a grammar: the extended symbol table
/// (space symbol, boundary, placeholder and tuple symbols), D and pi.
class CompilationUnit {
public:
    explicit CompilationUnit(Grammar grammar);

    [[nodiscard]] const Grammar& grammar() const { return grammar_; }
    [[nodiscard]] const SymbolTable& symbols() const { return symbols_; }
    [[nodiscard]] SymbolId zero() const { return zero_; }
    [[nodiscard]] SymbolId boundary() const { return boundary_; }
    [[nodiscard]] SymbolId placeholder() const { return placeholder_; }
    [[nodiscard]] const std::vector<PaddedCentre>& centres() const { return centres_; }
    [[nodiscard]] const TupleAlphabet& pi() const { return pi_; }

    /// pi plus the boundary symbol.
    [[nodiscard]] Alphabet marked_alphabet() const;
    /// pi plus the placeholder symbol.
    [[nodiscard]] Alphabet placeholder_alphabet() const;

    /// Exact language of a field on one tape; an omitted field is sigma*.
    [[nodiscard]] Automaton tape_language(const Field& field, std::size_t tape) const;
    /// sigma* followed by the field.
    [[nodiscard]] Automaton left_context(const Field& field, std::size_t tape) const;
    /// The field followed by sigma*.
    [[nodiscard]] Automaton right_context(const Field& field, std::size_t tape) const;

    /// izeros of a rule's left or right context vector.
    [[nodiscard]] Automaton left_izeros(const std::vector<Field>& left) const;
    [[nodiscard]] Automaton right_izeros(const std::vector<Field>& right) const;
    [[nodiscard]] Automaton izeros(std::span<const Automaton> per_tape) const;

    /// Tuple-symbol name for a column, components joined by ':'.
    [[nodiscard]] std::string column_name(const Column& column) const;

private:
    Grammar grammar_;
    SymbolTable symbols_;
    SymbolId zero_ = kEpsilon;
    SymbolId boundary_ = kEpsilon;
    SymbolId placeholder_ = kEpsilon;
    std::vector<PaddedCentre> centres_;
    TupleAlphabet pi_;
};

/// Strings over pi matching the lexical centre of an SC rule but not its
/// surface centre. Both centres are 0-inserted, never padded.
[[nodiscard]] Automaton sc_centre_language(const SCRule& rule, const CompilationUnit& unit);

}  // namespace tlc
