#pragma once

#include "tlc/automaton.hpp"

#include <span>
#include <vector>

namespace tlc {

/// One column of the n-tape representation: an interned symbol standing for
/// an n-tuple of per-tape symbols.
struct TupleSymbol {
    SymbolId id = kEpsilon;
    std::vector<SymbolId> components;

    friend bool operator==(const TupleSymbol&, const TupleSymbol&) = default;
};

/// A finite set of tuple symbols of a fixed arity.
class TupleAlphabet {
public:
    TupleAlphabet() = default;
    explicit TupleAlphabet(std::size_t arity) : arity_(arity) {}

    /// Adds a tuple symbol; adding the same id twice is a no-op.
    void add(TupleSymbol symbol);

    [[nodiscard]] std::size_t arity() const { return arity_; }
    [[nodiscard]] const std::vector<TupleSymbol>& symbols() const { return symbols_; }
    [[nodiscard]] std::size_t size() const { return symbols_.size(); }
    [[nodiscard]] Alphabet ids() const;
    /// Returns nullptr if no member has these components.
    [[nodiscard]] const TupleSymbol* find(std::span<const SymbolId> components) const;
    [[nodiscard]] const TupleSymbol* find(SymbolId id) const;

private:
    std::size_t arity_ = 0;
    std::vector<TupleSymbol> symbols_;
};

/// Intro_S: the language of a with symbols of S inserted anywhere, any number
/// of times. The result alphabet is alphabet(a) plus S.
[[nodiscard]] Automaton intro(const Alphabet& inserted, const Automaton& a);

/// Sub_{A,B}: each occurrence of the word target in a string of a may be
/// replaced by any string of replacement, independently per occurrence.
/// Original strings remain in the result. Throws tlc::Error for an empty target.
[[nodiscard]] Automaton sub(const Automaton& replacement, std::span<const SymbolId> target, const Automaton& a);

/// Strings over pi whose tape-i projection is accepted by per_tape[i] for every i.
/// Throws tlc::Error when per_tape.size() != pi.arity().
[[nodiscard]] Automaton tuple_product(std::span<const Automaton> per_tape, const TupleAlphabet& pi);

}  // namespace tlc
