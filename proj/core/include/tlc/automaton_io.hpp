#pragma once

#include "tlc/automaton.hpp"
#include "tlc/symbol_table.hpp"

#include <iosfwd>
#include <string_view>

namespace tlc {

/// Text dump, one automaton per stream:
///
///     states <n> initial <q0> alphabet <k>
///     sym <id> <name>          (k lines)
///     <src> <sym-id> <dst>     (one per transition; sym-id -1 is epsilon)
///     final <q>                (one per final state)
void write_automaton(std::ostream& out, const Automaton& a, const SymbolTable& symbols);

struct LoadedAutomaton {
    SymbolTable symbols;
    Automaton automaton;
};

/// Parses the text dump. Symbol names are interned into a fresh table, so
/// ids in the result need not match the ids in the file. Throws tlc::Error.
[[nodiscard]] LoadedAutomaton read_automaton(std::istream& in);

/// Same as above, interning into an existing table.
[[nodiscard]] Automaton read_automaton(std::istream& in, SymbolTable& symbols);

void write_dot(std::ostream& out, const Automaton& a, const SymbolTable& symbols, std::string_view graph_name = "fsa");

}  // namespace tlc
