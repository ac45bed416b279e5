#pragma once

#include "tlc/automaton.hpp"
#include "tlc/preprocessor.hpp"
#include "tlc/relation.hpp"
#include "tlc/variant.hpp"

#include <string_view>

namespace tlc {

enum class Phase { initial, after_cr, after_sc };

/// A language of boundary-marked, zero-padded partition strings over pi plus
/// the boundary symbol.
struct MarkedLanguage {
    Automaton automaton;
    Phase phase = Phase::initial;
};

/// w (D w)*
[[nodiscard]] MarkedLanguage initial_approximation(const CompilationUnit& unit);

/// Partitioned strings in which `centre` occurs in a context no rule with that
/// centre allows. Over pi, the boundary and the placeholder; strings that still
/// contain the placeholder are irrelevant to the caller.
[[nodiscard]] Automaton cr_disallowed_set(const CompilationUnit& unit, const PaddedCentre& centre);

/// Removes every string containing a centre occurrence no CR rule allows.
[[nodiscard]] MarkedLanguage apply_cr(const MarkedLanguage& initial, const CompilationUnit& unit);

/// Partitioned strings in which `rule` is violated under the given variant.
[[nodiscard]] Automaton sc_violation_set(const SCRule& rule, const CompilationUnit& unit, Variant variant);

[[nodiscard]] MarkedLanguage apply_sc(const MarkedLanguage& after_cr, const CompilationUnit& unit, Variant variant);

/// The three phase snapshots, each minimized.
struct PhaseSnapshots {
    MarkedLanguage initial;
    MarkedLanguage after_cr;
    MarkedLanguage after_sc;
};

[[nodiscard]] PhaseSnapshots compile_phases(const CompilationUnit& unit, Variant variant = Variant::spans);

/// The final marked language S0.
[[nodiscard]] MarkedLanguage compile_grammar(const CompilationUnit& unit, Variant variant = Variant::spans);

/// Erases boundary symbols and turns space-symbol components into empty
/// components. Requires phase == after_sc.
[[nodiscard]] CompiledRelation strip_markers(const MarkedLanguage& s0, const CompilationUnit& unit);

/// Parse-free convenience: preprocess, compile and strip.
[[nodiscard]] CompiledRelation compile_relation(const Grammar& grammar, Variant variant = Variant::spans);

}  // namespace tlc
