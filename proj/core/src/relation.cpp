#include "tlc/relation.hpp"

#include "tlc/automaton_io.hpp"
#include "tlc/error.hpp"
#include "tlc/regex.hpp"

#include <cctype>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace tlc {

std::string label_name(const std::vector<SymbolId>& components, const SymbolTable& symbols) {
    std::string out;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i > 0) {
            out += ':';
        }
        out += components[i] == kEpsilon ? std::string("-") : symbols.name(components[i]);
    }
    return out;
}

CompiledRelation::CompiledRelation(std::size_t lexical, std::size_t surface, std::vector<Alphabet> alphabets,
                                   SymbolTable symbols)
    : lexical_(lexical), surface_(surface), alphabets_(std::move(alphabets)), symbols_(std::move(symbols)) {
    if (alphabets_.size() != lexical_ + surface_) {
        throw Error("relation needs one alphabet per tape");
    }
}

SymbolId CompiledRelation::add_label(const std::vector<SymbolId>& components) {
    if (components.size() != tapes()) {
        throw Error("label arity " + std::to_string(components.size()) + " does not match " +
                    std::to_string(tapes()) + " tapes");
    }
    bool all_empty = true;
    for (std::size_t t = 0; t < components.size(); ++t) {
        if (components[t] == kEpsilon) {
            continue;
        }
        all_empty = false;
        if (!alphabet_contains(alphabets_[t], components[t])) {
            throw Error("label component '" + symbols_.name(components[t]) + "' is not in the alphabet of tape " +
                        std::to_string(t + 1));
        }
    }
    if (all_empty) {
        throw Error("a label must be non-empty on at least one tape");
    }
    const SymbolId id = symbols_.intern(label_name(components, symbols_));
    labels_.emplace(id, components);
    return id;
}

const std::vector<SymbolId>& CompiledRelation::label(SymbolId id) const {
    const auto it = labels_.find(id);
    if (it == labels_.end()) {
        throw Error("symbol " + std::to_string(id) + " is not a relation label");
    }
    return it->second;
}

Alphabet CompiledRelation::label_alphabet() const {
    std::vector<SymbolId> ids;
    for (const auto& [id, components] : labels_) {
        ids.push_back(id);
    }
    return make_alphabet(std::move(ids));
}

Word CompiledRelation::parse_word(std::size_t tape, std::string_view text) const {
    if (tape >= tapes()) {
        throw Error("tape " + std::to_string(tape + 1) + " does not exist");
    }
    Word out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i])) != 0) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])) == 0) {
            ++i;
        }
        const std::string_view run = text.substr(start, i - start);
        std::size_t failed_at = 0;
        if (!split_symbols(run, symbols_, alphabets_[tape], out, &failed_at)) {
            throw Error("unknown symbol '" + std::string(run.substr(failed_at)) + "' for tape " +
                        std::to_string(tape + 1));
        }
    }
    return out;
}

std::string CompiledRelation::format_word(std::span<const SymbolId> word) const {
    bool compact = true;
    for (const auto& alphabet : alphabets_) {
        for (SymbolId s : alphabet) {
            compact = compact && symbols_.name(s).size() == 1;
        }
    }
    std::string out;
    for (SymbolId s : word) {
        if (!compact && !out.empty()) {
            out += ' ';
        }
        out += symbols_.name(s);
    }
    return out;
}

void write_relation(std::ostream& out, const CompiledRelation& relation) {
    out << "tapes lexical " << relation.lexical_tapes() << " surface " << relation.surface_tapes() << '\n';
    for (std::size_t t = 0; t < relation.tapes(); ++t) {
        out << "alphabet " << t + 1 << " :";
        for (SymbolId s : relation.alphabets()[t]) {
            out << ' ' << relation.symbols().name(s);
        }
        out << '\n';
    }
    write_automaton(out, relation.machine(), relation.symbols());
}

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error("relation dump: " + message); }

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    return {std::istream_iterator<std::string>(in), std::istream_iterator<std::string>()};
}

}  // namespace

CompiledRelation read_relation(std::istream& in) {
    std::size_t lexical = 0;
    std::size_t surface = 0;
    std::vector<std::vector<std::string>> alphabet_names;
    std::string line;
    std::ostringstream rest;
    bool in_automaton = false;
    while (std::getline(in, line)) {
        if (in_automaton) {
            rest << line << '\n';
            continue;
        }
        const auto words = tokens(line);
        if (words.empty() || words.front().front() == '#') {
            continue;
        }
        if (words.front() == "tapes") {
            if (words.size() != 5 || words[1] != "lexical" || words[3] != "surface") {
                fail("expected 'tapes lexical <N> surface <M>'");
            }
            try {
                lexical = std::stoul(words[2]);
                surface = std::stoul(words[4]);
            } catch (const std::exception&) {
                fail("bad tape counts");
            }
            alphabet_names.assign(lexical + surface, {});
        } else if (words.front() == "alphabet") {
            std::size_t tape = 0;
            try {
                tape = std::stoul(words.at(1));
            } catch (const std::exception&) {
                fail("bad alphabet line");
            }
            if (tape < 1 || tape > alphabet_names.size() || words.size() < 3 || words[2] != ":") {
                fail("bad alphabet line");
            }
            alphabet_names[tape - 1].assign(words.begin() + 3, words.end());
        } else if (words.front() == "states") {
            in_automaton = true;
            rest << line << '\n';
        } else {
            fail("unexpected line '" + line + "'");
        }
    }
    if (lexical == 0 || surface == 0) {
        fail("missing tapes line");
    }

    SymbolTable symbols;
    std::vector<Alphabet> alphabets;
    for (const auto& names : alphabet_names) {
        std::vector<SymbolId> ids;
        for (const auto& n : names) {
            ids.push_back(symbols.intern(n));
        }
        alphabets.push_back(make_alphabet(std::move(ids)));
    }
    CompiledRelation relation(lexical, surface, std::move(alphabets), std::move(symbols));

    SymbolTable file_symbols;
    std::istringstream automaton_text(rest.str());
    const Automaton raw = read_automaton(automaton_text, file_symbols);

    std::map<SymbolId, SymbolId> relabel;
    for (SymbolId s : raw.alphabet()) {
        const std::string& name = file_symbols.name(s);
        std::vector<SymbolId> components;
        std::size_t start = 0;
        while (true) {
            const auto colon = name.find(':', start);
            const std::string part = name.substr(start, colon == std::string::npos ? std::string::npos : colon - start);
            const std::size_t tape = components.size();
            if (part == "-") {
                components.push_back(kEpsilon);
            } else {
                const SymbolId id = relation.symbols().find(part);
                if (id == kEpsilon || tape >= relation.tapes() || !alphabet_contains(relation.alphabets()[tape], id)) {
                    fail("label '" + name + "' uses symbol '" + part + "' outside the alphabet of tape " +
                         std::to_string(tape + 1));
                }
                components.push_back(id);
            }
            if (colon == std::string::npos) {
                break;
            }
            start = colon + 1;
        }
        relabel[s] = relation.add_label(components);
    }
    Automaton machine = map_symbols(raw, [&](SymbolId s) { return relabel.at(s); }, relation.label_alphabet());
    if (machine.has_deterministic_structure()) {
        machine.mark_deterministic();
    }
    relation.set_machine(std::move(machine));
    return relation;
}

}  // namespace tlc
