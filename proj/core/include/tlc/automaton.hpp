#pragma once

#include "tlc/symbol_table.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace tlc {

using StateId = std::int32_t;

/// Sorted, duplicate-free set of symbol ids.
using Alphabet = std::vector<SymbolId>;
using Word = std::vector<SymbolId>;

[[nodiscard]] Alphabet make_alphabet(std::vector<SymbolId> symbols);
[[nodiscard]] Alphabet alphabet_union(const Alphabet& a, const Alphabet& b);
[[nodiscard]] bool alphabet_contains(const Alphabet& alphabet, SymbolId symbol);

struct Transition {
    SymbolId symbol;  // kEpsilon for an epsilon move
    StateId target;

    friend bool operator==(const Transition&, const Transition&) = default;
    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Finite-state acceptor over a declared alphabet.
///
/// Epsilon moves are allowed while an automaton is being built; operations
/// that promise determinism (determinize, minimize, the product
/// constructions) return epsilon-free machines with the deterministic flag set.
/// Every state id lies in [0, num_states()).
class Automaton {
public:
    /// One non-final initial state and no transitions: the empty language.
    explicit Automaton(Alphabet alphabet = {});

    StateId add_state(bool final = false);
    /// Throws AlphabetError if symbol is neither kEpsilon nor in the alphabet.
    void add_transition(StateId source, SymbolId symbol, StateId target);
    void set_final(StateId state, bool final = true);
    void set_initial(StateId state);
    /// Adds symbols to the declared alphabet; never removes any.
    void extend_alphabet(const Alphabet& symbols);

    [[nodiscard]] std::size_t num_states() const { return transitions_.size(); }
    [[nodiscard]] std::size_t num_transitions() const;
    [[nodiscard]] StateId initial() const { return initial_; }
    [[nodiscard]] bool is_final(StateId state) const { return finals_[static_cast<std::size_t>(state)] != 0; }
    [[nodiscard]] std::vector<StateId> final_states() const;
    [[nodiscard]] std::span<const Transition> transitions(StateId state) const {
        return transitions_[static_cast<std::size_t>(state)];
    }
    [[nodiscard]] const Alphabet& alphabet() const { return alphabet_; }

    [[nodiscard]] bool is_deterministic() const { return deterministic_; }
    /// Recomputes determinism from the transition structure.
    [[nodiscard]] bool has_deterministic_structure() const;
    /// Sets the flag after checking the structure; throws std::logic_error on violation.
    void mark_deterministic();

    /// Deterministic successor, or -1. Only meaningful when is_deterministic().
    [[nodiscard]] StateId step(StateId state, SymbolId symbol) const;

    /// Sorts each state's transitions and removes duplicates.
    void normalize();

private:
    std::vector<std::vector<Transition>> transitions_;
    std::vector<char> finals_;
    StateId initial_ = 0;
    Alphabet alphabet_;
    bool deterministic_ = false;
};

// ---- basic languages -------------------------------------------------------

[[nodiscard]] Automaton empty_language(const Alphabet& alphabet);
[[nodiscard]] Automaton epsilon_language(const Alphabet& alphabet);
[[nodiscard]] Automaton symbol_language(SymbolId symbol, const Alphabet& alphabet);
[[nodiscard]] Automaton word_language(std::span<const SymbolId> word, const Alphabet& alphabet);
/// Any single symbol of the alphabet.
[[nodiscard]] Automaton any_symbol_language(const Alphabet& alphabet);
/// alphabet*
[[nodiscard]] Automaton universal_language(const Alphabet& alphabet);

// ---- regular operations ----------------------------------------------------
// Binary operations accept operands over different alphabets; the result is
// declared over the union. Only complement needs an explicit universe.

[[nodiscard]] Automaton concat(const Automaton& a, const Automaton& b);
[[nodiscard]] Automaton unite(const Automaton& a, const Automaton& b);
[[nodiscard]] Automaton star(const Automaton& a);
[[nodiscard]] Automaton plus(const Automaton& a);
[[nodiscard]] Automaton optional(const Automaton& a);
[[nodiscard]] Automaton intersect(const Automaton& a, const Automaton& b);
[[nodiscard]] Automaton difference(const Automaton& a, const Automaton& b);
/// alphabet* minus L(a). Throws AlphabetError unless alphabet(a) is a subset of alphabet.
[[nodiscard]] Automaton complement(const Automaton& a, const Alphabet& alphabet);
[[nodiscard]] Automaton reverse(const Automaton& a);

/// Maps every transition label through relabel; a kEpsilon result turns the
/// transition into an epsilon move. The result is declared over new_alphabet.
[[nodiscard]] Automaton map_symbols(const Automaton& a, const std::function<SymbolId(SymbolId)>& relabel,
                                    const Alphabet& new_alphabet);

// ---- normal forms ----------------------------------------------------------

/// Removes states that are unreachable or cannot reach a final state.
/// The initial state is always kept. States are renumbered in discovery order.
[[nodiscard]] Automaton trim(const Automaton& a);
[[nodiscard]] Automaton determinize(const Automaton& a);
/// Minimal trim DFA (no sink state) with a canonical state numbering, so
/// equal languages produce identical automata.
[[nodiscard]] Automaton minimize(const Automaton& a);

// ---- queries ---------------------------------------------------------------

/// Throws AlphabetError if a symbol of word is outside alphabet(a).
[[nodiscard]] bool accepts(const Automaton& a, std::span<const SymbolId> word);
[[nodiscard]] bool is_empty(const Automaton& a);
[[nodiscard]] bool equivalent(const Automaton& a, const Automaton& b);
/// L(a) is a subset of L(b).
[[nodiscard]] bool is_subset(const Automaton& a, const Automaton& b);
/// All accepted words of length <= max_len, shortest first, then
/// lexicographically by symbol id.
[[nodiscard]] std::vector<Word> enumerate(const Automaton& a, std::size_t max_len);

}  // namespace tlc
