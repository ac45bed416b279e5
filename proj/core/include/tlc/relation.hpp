#pragma once

#include "tlc/automaton.hpp"
#include "tlc/grammar.hpp"
#include "tlc/symbol_table.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace tlc {

/// An n-tape machine relating lexical tuples to surface strings. Every
/// transition carries an n-tuple label whose components are tape symbols or
/// kEpsilon; no label is empty on all tapes.
class CompiledRelation {
public:
    CompiledRelation() = default;
    CompiledRelation(std::size_t lexical, std::size_t surface, std::vector<Alphabet> alphabets, SymbolTable symbols);

    /// Interns a label and returns its symbol id. Components use kEpsilon for an empty tape.
    SymbolId add_label(const std::vector<SymbolId>& components);
    void set_machine(Automaton machine) { machine_ = std::move(machine); }

    [[nodiscard]] std::size_t lexical_tapes() const { return lexical_; }
    [[nodiscard]] std::size_t surface_tapes() const { return surface_; }
    [[nodiscard]] std::size_t tapes() const { return lexical_ + surface_; }
    [[nodiscard]] const std::vector<Alphabet>& alphabets() const { return alphabets_; }
    [[nodiscard]] const SymbolTable& symbols() const { return symbols_; }
    [[nodiscard]] const Automaton& machine() const { return machine_; }
    [[nodiscard]] const std::vector<SymbolId>& label(SymbolId id) const;
    [[nodiscard]] Alphabet label_alphabet() const;

    /// Splits text into symbols of one tape by longest match. Throws tlc::Error on unknown symbols.
    [[nodiscard]] Word parse_word(std::size_t tape, std::string_view text) const;
    [[nodiscard]] std::string format_word(std::span<const SymbolId> word) const;

private:
    std::size_t lexical_ = 0;
    std::size_t surface_ = 0;
    std::vector<Alphabet> alphabets_;
    SymbolTable symbols_;
    std::map<SymbolId, std::vector<SymbolId>> labels_;
    Automaton machine_;
};

/// Label name: components joined by ':' with '-' for an empty component.
[[nodiscard]] std::string label_name(const std::vector<SymbolId>& components, const SymbolTable& symbols);

/// Writes `tapes` and `alphabet` lines in grammar syntax followed by the
/// automaton dump, whose symbol names are label names.
void write_relation(std::ostream& out, const CompiledRelation& relation);
/// Throws tlc::Error on malformed input.
[[nodiscard]] CompiledRelation read_relation(std::istream& in);

}  // namespace tlc
