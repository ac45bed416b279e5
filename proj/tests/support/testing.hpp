#pragma once

#include "tlc/automaton.hpp"
#include "tlc/grammar.hpp"

#include <random>
#include <string>
#include <vector>

namespace tlc::testing {

[[nodiscard]] std::string read_data(const std::string& name);
[[nodiscard]] Grammar load_grammar(const std::string& name);
[[nodiscard]] Grammar sample_grammar();

/// Tuple from one text per tape, each split by the grammar's symbol names.
[[nodiscard]] StringTuple tuple(const Grammar& g, const std::vector<std::string>& words);

/// All words over sigma of length <= max_len, shortest first.
[[nodiscard]] std::vector<Word> words_up_to(const Alphabet& sigma, std::size_t max_len);

/// Random NFA with epsilon moves over sigma.
[[nodiscard]] Automaton random_nfa(std::mt19937& rng, const Alphabet& sigma, std::size_t states);

/// Brzozowski double reversal with subset construction, trimmed. Minimal by
/// construction, so its state count is the reference for minimize.
[[nodiscard]] Automaton brzozowski(const Automaton& a);

/// NFA membership by direct epsilon-closure simulation.
[[nodiscard]] bool simulate(const Automaton& a, std::span<const SymbolId> word);

struct RandomGrammarShape {
    std::size_t lexical = 1;
    std::size_t surface = 1;
    std::size_t max_cr = 3;
    std::size_t max_sc = 1;
};

/// Text of a small random grammar over 2-3 single-character symbols per tape.
[[nodiscard]] std::string random_grammar_text(std::mt19937& rng, const RandomGrammarShape& shape = {});

}  // namespace tlc::testing
