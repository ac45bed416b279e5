#include "tlc/compiler.hpp"

#include "tlc/calculus.hpp"
#include "tlc/error.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace tlc {

MarkedLanguage initial_approximation(const CompilationUnit& unit) {
    const Alphabet sigma = unit.marked_alphabet();
    const Automaton boundary = symbol_language(unit.boundary(), sigma);
    Automaton centres = empty_language(sigma);
    for (const auto& c : unit.centres()) {
        centres = unite(centres, word_language(c.word, sigma));
    }
    return {minimize(concat(boundary, star(concat(centres, boundary)))), Phase::initial};
}

Automaton cr_disallowed_set(const CompilationUnit& unit, const PaddedCentre& centre) {
    const Alphabet pi = unit.pi().ids();
    const Alphabet with_tau = unit.placeholder_alphabet();
    const Automaton tau = symbol_language(unit.placeholder(), with_tau);

    // contexts the centre is allowed in, with the placeholder standing for it
    Automaton allowed = empty_language(with_tau);
    for (std::size_t r : centre.rules) {
        const auto& rule = unit.grammar().cr_rules[r];
        allowed = unite(allowed, concat(concat(unit.left_izeros(rule.left), tau), unit.right_izeros(rule.right)));
    }
    const Automaton any_context = concat(concat(universal_language(pi), tau), universal_language(pi));
    const Automaton disallowed = minimize(difference(any_context, allowed));

    Word marked_centre{unit.boundary()};
    marked_centre.insert(marked_centre.end(), centre.word.begin(), centre.word.end());
    marked_centre.push_back(unit.boundary());

    const Alphabet all = alphabet_union(unit.marked_alphabet(), with_tau);
    const Automaton with_boundaries = intro(Alphabet{unit.boundary()}, disallowed);
    const SymbolId target[] = {unit.placeholder()};
    return minimize(sub(word_language(marked_centre, all), target, with_boundaries));
}

MarkedLanguage apply_cr(const MarkedLanguage& initial, const CompilationUnit& unit) {
    if (initial.phase != Phase::initial) {
        throw std::invalid_argument("apply_cr expects the initial approximation");
    }
    const Automaton tau_free = universal_language(unit.marked_alphabet());
    Automaton bad = empty_language(unit.marked_alphabet());
    for (const auto& centre : unit.centres()) {
        bad = unite(bad, intersect(cr_disallowed_set(unit, centre), tau_free));
    }
    return {minimize(difference(initial.automaton, bad)), Phase::after_cr};
}

Automaton sc_violation_set(const SCRule& rule, const CompilationUnit& unit, Variant variant) {
    const Alphabet sigma = unit.marked_alphabet();
    const Alphabet boundary_set{unit.boundary()};
    const Automaton boundary = symbol_language(unit.boundary(), sigma);
    const Automaton left = unit.left_izeros(rule.left);
    const Automaton right = unit.right_izeros(rule.right);
    const Automaton centre = sc_centre_language(rule, unit);

    Automaton violations;
    if (variant == Variant::spans) {
        violations = intro(boundary_set, concat(concat(concat(concat(left, boundary), centre), boundary), right));
    } else {
        violations = concat(concat(concat(concat(intro(boundary_set, left), boundary), centre), boundary),
                            intro(boundary_set, right));
    }
    if (variant != Variant::single) {
        // an empty centre between two boundaries also matches a single boundary
        const SymbolId double_boundary[] = {unit.boundary(), unit.boundary()};
        violations = sub(boundary, double_boundary, violations);
    }
    return minimize(violations);
}

MarkedLanguage apply_sc(const MarkedLanguage& after_cr, const CompilationUnit& unit, Variant variant) {
    if (after_cr.phase != Phase::after_cr) {
        throw std::invalid_argument("apply_sc expects the CR-filtered language");
    }
    Automaton bad = empty_language(unit.marked_alphabet());
    for (const auto& rule : unit.grammar().sc_rules) {
        bad = unite(bad, sc_violation_set(rule, unit, variant));
    }
    return {minimize(difference(after_cr.automaton, bad)), Phase::after_sc};
}

PhaseSnapshots compile_phases(const CompilationUnit& unit, Variant variant) {
    MarkedLanguage initial = initial_approximation(unit);
    MarkedLanguage after_cr = apply_cr(initial, unit);
    MarkedLanguage after_sc = apply_sc(after_cr, unit, variant);
    return {std::move(initial), std::move(after_cr), std::move(after_sc)};
}

MarkedLanguage compile_grammar(const CompilationUnit& unit, Variant variant) {
    return apply_sc(apply_cr(initial_approximation(unit), unit), unit, variant);
}

CompiledRelation strip_markers(const MarkedLanguage& s0, const CompilationUnit& unit) {
    if (s0.phase != Phase::after_sc) {
        throw std::invalid_argument("strip_markers expects the final marked language");
    }
    const auto& g = unit.grammar();
    CompiledRelation relation(g.tapes.lexical, g.tapes.surface, g.tapes.alphabets, g.symbols);

    std::map<SymbolId, SymbolId> relabel;
    for (const auto& column : unit.pi().symbols()) {
        std::vector<SymbolId> components = column.components;
        for (auto& c : components) {
            if (c == unit.zero()) {
                c = kEpsilon;
            }
        }
        relabel[column.id] = relation.add_label(components);
    }
    const Automaton stripped = map_symbols(
        s0.automaton,
        [&](SymbolId s) { return s == unit.boundary() ? kEpsilon : relabel.at(s); },
        relation.label_alphabet());
    relation.set_machine(minimize(stripped));
    return relation;
}

CompiledRelation compile_relation(const Grammar& grammar, Variant variant) {
    const CompilationUnit unit(grammar);
    return strip_markers(compile_grammar(unit, variant), unit);
}

}  // namespace tlc
