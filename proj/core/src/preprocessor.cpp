#include "tlc/preprocessor.hpp"

#include <algorithm>

namespace tlc {

std::vector<Column> pad_centre(const StringTuple& centre, SymbolId zero) {
    std::size_t width = 0;
    for (const auto& w : centre) {
        width = std::max(width, w.size());
    }
    std::vector<Column> columns(width, Column(centre.size(), zero));
    for (std::size_t tape = 0; tape < centre.size(); ++tape) {
        for (std::size_t i = 0; i < centre[tape].size(); ++i) {
            columns[i][tape] = centre[tape][i];
        }
    }
    return columns;
}

std::vector<PaddedCentre> build_D(const Grammar& g, SymbolId zero) {
    if (g.cr_rules.empty()) {
        throw GrammarError(Diagnostic{Severity::error, 0, "grammar has no context restriction rules"});
    }
    for (const auto& d : validate(g)) {
        if (d.severity == Severity::error) {
            throw GrammarError(d);
        }
    }
    std::vector<PaddedCentre> out;
    for (std::size_t r = 0; r < g.cr_rules.size(); ++r) {
        for (const auto& tuple : g.cr_rules[r].centre) {
            auto it = std::find_if(out.begin(), out.end(), [&](const PaddedCentre& c) { return c.source == tuple; });
            if (it == out.end()) {
                out.push_back(PaddedCentre{tuple, pad_centre(tuple, zero), {}, {}});
                it = std::prev(out.end());
            }
            if (std::find(it->rules.begin(), it->rules.end(), r) == it->rules.end()) {
                it->rules.push_back(r);
            }
        }
    }
    return out;
}

Automaton izeros(std::span<const Automaton> per_tape, const TupleAlphabet& pi, SymbolId zero) {
    std::vector<Automaton> padded;
    padded.reserve(per_tape.size());
    const Alphabet zero_set{zero};
    for (const auto& a : per_tape) {
        padded.push_back(intro(zero_set, a));
    }
    return tuple_product(padded, pi);
}

// ---- CompilationUnit -------------------------------------------------------

CompilationUnit::CompilationUnit(Grammar grammar) : grammar_(std::move(grammar)), symbols_(grammar_.symbols) {
    zero_ = symbols_.intern(kZeroName);
    boundary_ = symbols_.intern(kBoundaryName);
    placeholder_ = symbols_.intern(kPlaceholderName);
    centres_ = build_D(grammar_, zero_);
    pi_ = TupleAlphabet(grammar_.tapes.tapes());
    for (auto& centre : centres_) {
        for (const auto& column : centre.columns) {
            const SymbolId id = symbols_.intern(column_name(column));
            pi_.add(TupleSymbol{id, column});
            centre.word.push_back(id);
        }
    }
}

Alphabet CompilationUnit::marked_alphabet() const { return alphabet_union(pi_.ids(), Alphabet{boundary_}); }

Alphabet CompilationUnit::placeholder_alphabet() const { return alphabet_union(pi_.ids(), Alphabet{placeholder_}); }

Automaton CompilationUnit::tape_language(const Field& field, std::size_t tape) const {
    const Alphabet& sigma = grammar_.tapes.alphabets.at(tape);
    return field ? from_regex(*field, sigma, &symbols_) : universal_language(sigma);
}

Automaton CompilationUnit::left_context(const Field& field, std::size_t tape) const {
    const Alphabet& sigma = grammar_.tapes.alphabets.at(tape);
    return field ? concat(universal_language(sigma), from_regex(*field, sigma, &symbols_)) : universal_language(sigma);
}

Automaton CompilationUnit::right_context(const Field& field, std::size_t tape) const {
    const Alphabet& sigma = grammar_.tapes.alphabets.at(tape);
    return field ? concat(from_regex(*field, sigma, &symbols_), universal_language(sigma)) : universal_language(sigma);
}

Automaton CompilationUnit::izeros(std::span<const Automaton> per_tape) const {
    return tlc::izeros(per_tape, pi_, zero_);
}

Automaton CompilationUnit::left_izeros(const std::vector<Field>& left) const {
    std::vector<Automaton> tapes;
    for (std::size_t t = 0; t < left.size(); ++t) {
        tapes.push_back(left_context(left[t], t));
    }
    return minimize(izeros(tapes));
}

Automaton CompilationUnit::right_izeros(const std::vector<Field>& right) const {
    std::vector<Automaton> tapes;
    for (std::size_t t = 0; t < right.size(); ++t) {
        tapes.push_back(right_context(right[t], t));
    }
    return minimize(izeros(tapes));
}

std::string CompilationUnit::column_name(const Column& column) const {
    std::string out;
    for (std::size_t i = 0; i < column.size(); ++i) {
        if (i > 0) {
            out += ':';
        }
        out += symbols_.name(column[i]);
    }
    return out;
}

Automaton sc_centre_language(const SCRule& rule, const CompilationUnit& unit) {
    const auto& tapes = unit.grammar().tapes;
    std::vector<Automaton> lexical_side;
    std::vector<Automaton> surface_side;
    for (std::size_t t = 0; t < tapes.tapes(); ++t) {
        if (tapes.is_lexical(t)) {
            lexical_side.push_back(unit.tape_language(rule.lexical_centre[t], t));
            surface_side.push_back(unit.tape_language(std::nullopt, t));
        } else {
            lexical_side.push_back(unit.tape_language(std::nullopt, t));
            surface_side.push_back(unit.tape_language(rule.surface_centre[t - tapes.lexical], t));
        }
    }
    return minimize(difference(unit.izeros(lexical_side), unit.izeros(surface_side)));
}

}  // namespace tlc
