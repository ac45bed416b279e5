#include "tlc/grammar.hpp"

#include <algorithm>
#include <set>

namespace tlc {

namespace {

bool single_char_names(const SymbolTable& symbols) {
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (symbols.name(static_cast<SymbolId>(i)).size() != 1) {
            return false;
        }
    }
    return true;
}

std::string field_text(const Field& f, const SymbolTable& symbols) { return f ? to_string(*f, symbols) : std::string(); }

std::string literal_text(const Word& w, const SymbolTable& symbols) {
    if (w.empty()) {
        return "[]";
    }
    std::string out;
    for (SymbolId s : w) {
        if (!out.empty()) {
            out += ' ';
        }
        out += symbols.name(s);
    }
    return out;
}

std::string join_fields(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += fields[i];
    }
    return out;
}

std::string side(const std::vector<std::string>& left, const std::vector<std::string>& centre,
                  const std::vector<std::string>& right) {
    return join_fields(left) + " _ " + join_fields(centre) + " _ " + join_fields(right);
}

template <typename Centre>
std::string rule_line(const Grammar& g, const std::string& name, const char* op, const std::vector<Field>& left,
                      const std::vector<Field>& right, Centre centre_of) {
    const auto& t = g.tapes;
    std::vector<std::string> ll, lc, lr, sl, sc, sr;
    for (std::size_t i = 0; i < t.tapes(); ++i) {
        auto& l = t.is_lexical(i) ? ll : sl;
        auto& c = t.is_lexical(i) ? lc : sc;
        auto& r = t.is_lexical(i) ? lr : sr;
        l.push_back(field_text(left[i], g.symbols));
        c.push_back(centre_of(i));
        r.push_back(field_text(right[i], g.symbols));
    }
    return "rule " + name + ' ' + op + "  lex : " + side(ll, lc, lr) + "  surf : " + side(sl, sc, sr) + '\n';
}

}  // namespace

std::string Grammar::format_word(std::span<const SymbolId> word) const {
    const bool compact = single_char_names(symbols);
    std::string out;
    for (SymbolId s : word) {
        if (!compact && !out.empty()) {
            out += ' ';
        }
        out += symbols.name(s);
    }
    return out;
}

std::string Grammar::format_tuple(const StringTuple& tuple) const {
    std::string out = "<";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += tuple[i].empty() ? std::string("[]") : format_word(tuple[i]);
    }
    return out + ">";
}

bool operator==(const Grammar& a, const Grammar& b) {
    if (!(a.tapes == b.tapes) || a.cr_rules != b.cr_rules || a.sc_rules != b.sc_rules ||
        a.symbols.size() != b.symbols.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.symbols.size(); ++i) {
        if (a.symbols.name(static_cast<SymbolId>(i)) != b.symbols.name(static_cast<SymbolId>(i))) {
            return false;
        }
    }
    return true;
}

std::string print_grammar(const Grammar& g) {
    std::string out =
        "tapes lexical " + std::to_string(g.tapes.lexical) + " surface " + std::to_string(g.tapes.surface) + '\n';
    for (std::size_t i = 0; i < g.tapes.tapes(); ++i) {
        out += "alphabet " + std::to_string(i + 1) + " :";
        for (SymbolId s : g.tapes.alphabets[i]) {
            out += ' ' + g.symbols.name(s);
        }
        out += '\n';
    }
    for (const auto& r : g.cr_rules) {
        if (r.centre.size() != 1) {
            throw Error("rule " + r.name + " has a multi-tuple centre, which the file format cannot express");
        }
        out += rule_line(g, r.name, "=>", r.left, r.right,
                         [&](std::size_t i) { return literal_text(r.centre.front()[i], g.symbols); });
    }
    for (const auto& r : g.sc_rules) {
        out += rule_line(g, r.name, "<=", r.left, r.right, [&](std::size_t i) {
            return field_text(g.tapes.is_lexical(i) ? r.lexical_centre[i] : r.surface_centre[i - g.tapes.lexical],
                              g.symbols);
        });
    }
    return out;
}

std::vector<Diagnostic> validate(const Grammar& g) {
    std::vector<Diagnostic> out;
    if (g.cr_rules.empty()) {
        out.push_back({Severity::error, 0, "grammar has no context restriction (=>) rules, so no partition is licensed"});
    }

    // Literal centres pad injectively, so overlap of padded centres is overlap of tuples.
    for (std::size_t i = 0; i < g.cr_rules.size(); ++i) {
        const std::set<StringTuple> ci(g.cr_rules[i].centre.begin(), g.cr_rules[i].centre.end());
        for (std::size_t j = i + 1; j < g.cr_rules.size(); ++j) {
            const std::set<StringTuple> cj(g.cr_rules[j].centre.begin(), g.cr_rules[j].centre.end());
            if (ci == cj) {
                continue;
            }
            for (const auto& tuple : ci) {
                if (cj.contains(tuple)) {
                    out.push_back({Severity::error, g.cr_rules[j].line,
                                   "centres of rules " + g.cr_rules[i].name + " and " + g.cr_rules[j].name +
                                       " overlap on " + g.format_tuple(tuple) + " but are not equal"});
                    break;
                }
            }
        }
    }

    for (std::size_t t = 0; t < g.tapes.tapes(); ++t) {
        std::set<SymbolId> used;
        for (const auto& r : g.cr_rules) {
            for (const auto& tuple : r.centre) {
                used.insert(tuple[t].begin(), tuple[t].end());
            }
        }
        for (SymbolId s : g.tapes.alphabets[t]) {
            if (!used.contains(s)) {
                out.push_back({Severity::warning, 0,
                               "symbol '" + g.symbols.name(s) + "' of tape " + std::to_string(t + 1) +
                                   " occurs in no rule centre and can never be realized"});
            }
        }
    }
    return out;
}

}  // namespace tlc
