#include "tlc/oracle.hpp"

#include "tlc/error.hpp"

#include <algorithm>
#include <string>

namespace tlc {

namespace {

using Ends = std::vector<bool>;

bool all_empty(const StringTuple& t) {
    return std::all_of(t.begin(), t.end(), [](const Word& w) { return w.empty(); });
}

// Positions e >= start such that word[start, e) is in the language of expr.
Ends ends(const Regex& expr, std::span<const SymbolId> word, std::size_t start, const Alphabet& sigma);

bool full_match(const Regex& expr, std::span<const SymbolId> word, const Alphabet& sigma) {
    return ends(expr, word, 0, sigma)[word.size()];
}

Ends ends_from_set(const Regex& expr, std::span<const SymbolId> word, const Ends& starts, const Alphabet& sigma) {
    Ends out(word.size() + 1, false);
    for (std::size_t s = 0; s < starts.size(); ++s) {
        if (!starts[s]) {
            continue;
        }
        const Ends e = ends(expr, word, s, sigma);
        for (std::size_t i = 0; i < e.size(); ++i) {
            out[i] = out[i] || e[i];
        }
    }
    return out;
}

Ends star_closure(const Regex& inner, std::span<const SymbolId> word, std::size_t start, const Alphabet& sigma,
                  bool include_start) {
    Ends reached(word.size() + 1, false);
    Ends frontier(word.size() + 1, false);
    frontier[start] = true;
    bool changed = true;
    while (changed) {
        changed = false;
        const Ends next = ends_from_set(inner, word, frontier, sigma);
        std::fill(frontier.begin(), frontier.end(), false);
        for (std::size_t i = 0; i < next.size(); ++i) {
            if (next[i] && !reached[i]) {
                reached[i] = true;
                frontier[i] = true;
                changed = true;
            }
        }
    }
    if (include_start) {
        reached[start] = true;
    }
    return reached;
}

Ends ends(const Regex& expr, std::span<const SymbolId> word, std::size_t start, const Alphabet& sigma) {
    Ends out(word.size() + 1, false);
    using K = Regex::Kind;
    switch (expr.kind()) {
        case K::empty:
            break;
        case K::epsilon:
            out[start] = true;
            break;
        case K::atom:
            if (start < word.size() && word[start] == expr.symbol()) {
                out[start + 1] = true;
            }
            break;
        case K::any:
            if (start < word.size() && alphabet_contains(sigma, word[start])) {
                out[start + 1] = true;
            }
            break;
        case K::concat: {
            Ends current(word.size() + 1, false);
            current[start] = true;
            for (const auto& part : expr.children()) {
                current = ends_from_set(part, word, current, sigma);
            }
            out = current;
            break;
        }
        case K::alternation:
            for (const auto& part : expr.children()) {
                const Ends e = ends(part, word, start, sigma);
                for (std::size_t i = 0; i < e.size(); ++i) {
                    out[i] = out[i] || e[i];
                }
            }
            break;
        case K::star:
            out = star_closure(expr.children()[0], word, start, sigma, true);
            break;
        case K::plus:
            out = star_closure(expr.children()[0], word, start, sigma, false);
            break;
        case K::optional:
            out = ends(expr.children()[0], word, start, sigma);
            out[start] = true;
            break;
        case K::intersection:
        case K::difference: {
            const Ends a = ends(expr.children()[0], word, start, sigma);
            const Ends b = ends(expr.children()[1], word, start, sigma);
            const bool keep_b = expr.kind() == K::intersection;
            for (std::size_t i = start; i < out.size(); ++i) {
                out[i] = a[i] && (b[i] == keep_b);
            }
            break;
        }
        case K::complement: {
            const Ends a = ends(expr.children()[0], word, start, sigma);
            for (std::size_t i = start; i < out.size(); ++i) {
                const bool in_sigma = std::all_of(word.begin() + static_cast<std::ptrdiff_t>(start),
                                                  word.begin() + static_cast<std::ptrdiff_t>(i),
                                                  [&](SymbolId s) { return alphabet_contains(sigma, s); });
                out[i] = in_sigma && !a[i];
            }
            break;
        }
        case K::intro: {
            // w is in Intro_S(A) iff deleting some of its S symbols lands in A
            const Alphabet& inserted = expr.symbols();
            const Regex& inner = expr.children()[0];
            for (std::size_t e = start; e <= word.size(); ++e) {
                const std::span<const SymbolId> piece = word.subspan(start, e - start);
                std::vector<std::size_t> optional_at;
                for (std::size_t i = 0; i < piece.size(); ++i) {
                    if (alphabet_contains(inserted, piece[i])) {
                        optional_at.push_back(i);
                    }
                }
                if (optional_at.size() > 20) {
                    throw Error("intro operand too long for direct matching");
                }
                for (std::size_t mask = 0; mask < (std::size_t{1} << optional_at.size()) && !out[e]; ++mask) {
                    Word kept;
                    std::size_t next = 0;
                    for (std::size_t i = 0; i < piece.size(); ++i) {
                        if (next < optional_at.size() && optional_at[next] == i) {
                            const bool drop = ((mask >> next) & 1U) != 0;
                            ++next;
                            if (drop) {
                                continue;
                            }
                        }
                        kept.push_back(piece[i]);
                    }
                    out[e] = full_match(inner, kept, sigma);
                }
            }
            break;
        }
        case K::sub:
        case K::tuple_product:
            throw Error("the direct matcher does not interpret sub or tuple products");
    }
    return out;
}

bool left_matches(const Field& field, const Word& word, const Alphabet& sigma) {
    if (!field) {
        return true;
    }
    for (std::size_t s = 0; s <= word.size(); ++s) {
        if (full_match(*field, std::span<const SymbolId>(word).subspan(s), sigma)) {
            return true;
        }
    }
    return false;
}

bool right_matches(const Field& field, const Word& word, const Alphabet& sigma) {
    if (!field) {
        return true;
    }
    const Ends e = ends(*field, word, 0, sigma);
    return std::find(e.begin(), e.end(), true) != e.end();
}

bool exact_matches(const Field& field, const Word& word, const Alphabet& sigma) {
    return !field || full_match(*field, word, sigma);
}

bool contexts_hold(const Grammar& g, const std::vector<Field>& lf, const std::vector<Field>& rf, const StringTuple& left,
                   const StringTuple& right) {
    for (std::size_t t = 0; t < g.tapes.tapes(); ++t) {
        const Alphabet& sigma = g.tapes.alphabets[t];
        if (!left_matches(lf[t], left[t], sigma) || !right_matches(rf[t], right[t], sigma)) {
            return false;
        }
    }
    return true;
}

void extend(const StringTuple& tuple, const std::vector<StringTuple>& centres, std::vector<std::size_t>& pos,
            bool last_empty, Partition& current, std::vector<Partition>& out) {
    bool at_end = true;
    for (std::size_t t = 0; t < tuple.size(); ++t) {
        at_end = at_end && pos[t] == tuple[t].size();
    }
    if (at_end) {
        out.push_back(current);
    }
    for (const auto& c : centres) {
        const bool empty = all_empty(c);
        if (empty && last_empty) {
            continue;
        }
        bool fits = true;
        for (std::size_t t = 0; t < tuple.size() && fits; ++t) {
            fits = pos[t] + c[t].size() <= tuple[t].size() &&
                   std::equal(c[t].begin(), c[t].end(), tuple[t].begin() + static_cast<std::ptrdiff_t>(pos[t]));
        }
        if (!fits) {
            continue;
        }
        for (std::size_t t = 0; t < tuple.size(); ++t) {
            pos[t] += c[t].size();
        }
        current.pieces.push_back(c);
        extend(tuple, centres, pos, empty, current, out);
        current.pieces.pop_back();
        for (std::size_t t = 0; t < tuple.size(); ++t) {
            pos[t] -= c[t].size();
        }
    }
}

std::vector<StringTuple> centre_set(const Grammar& g) {
    std::vector<StringTuple> out;
    for (const auto& rule : g.cr_rules) {
        for (const auto& c : rule.centre) {
            if (std::find(out.begin(), out.end(), c) == out.end()) {
                out.push_back(c);
            }
        }
    }
    return out;
}

}  // namespace

bool regex_matches(const Regex& expr, std::span<const SymbolId> word, const Alphabet& sigma) {
    return full_match(expr, word, sigma);
}

StringTuple concat_pieces(const Partition& p, std::size_t first, std::size_t last, std::size_t tapes) {
    StringTuple out(tapes);
    for (std::size_t i = first; i < last; ++i) {
        for (std::size_t t = 0; t < tapes; ++t) {
            out[t].insert(out[t].end(), p.pieces[i][t].begin(), p.pieces[i][t].end());
        }
    }
    return out;
}

std::vector<Partition> enumerate_partitions(const StringTuple& tuple, const std::vector<StringTuple>& centres) {
    for (const auto& c : centres) {
        if (c.size() != tuple.size()) {
            throw Error("centre arity does not match the analysed tuple");
        }
    }
    std::vector<Partition> out;
    std::vector<std::size_t> pos(tuple.size(), 0);
    Partition current;
    extend(tuple, centres, pos, false, current, out);
    return out;
}

bool contextually_allows(const Grammar& g, const CRRule& rule, const StringTuple& left, const StringTuple& centre,
                         const StringTuple& right) {
    return std::find(rule.centre.begin(), rule.centre.end(), centre) != rule.centre.end() &&
           contexts_hold(g, rule.left, rule.right, left, right);
}

bool coercively_disallows(const Grammar& g, const SCRule& rule, const StringTuple& left, const StringTuple& centre,
                          const StringTuple& right) {
    if (!contexts_hold(g, rule.left, rule.right, left, right)) {
        return false;
    }
    const auto& tapes = g.tapes;
    for (std::size_t t = 0; t < tapes.lexical; ++t) {
        if (!exact_matches(rule.lexical_centre[t], centre[t], tapes.alphabets[t])) {
            return false;
        }
    }
    for (std::size_t t = tapes.lexical; t < tapes.tapes(); ++t) {
        if (!exact_matches(rule.surface_centre[t - tapes.lexical], centre[t], tapes.alphabets[t])) {
            return true;
        }
    }
    return false;
}

bool cr_condition_holds(const Grammar& g, const Partition& p) {
    const std::size_t n = g.tapes.tapes();
    const std::size_t k = p.pieces.size();
    for (std::size_t i = 0; i < k; ++i) {
        const StringTuple left = concat_pieces(p, 0, i, n);
        const StringTuple right = concat_pieces(p, i + 1, k, n);
        const bool licensed = std::any_of(g.cr_rules.begin(), g.cr_rules.end(), [&](const CRRule& rule) {
            return contextually_allows(g, rule, left, p.pieces[i], right);
        });
        if (!licensed) {
            return false;
        }
    }
    return true;
}

bool sc_condition_holds(const Grammar& g, const Partition& p, Variant variant) {
    const std::size_t n = g.tapes.tapes();
    const std::size_t k = p.pieces.size();
    auto violated = [&](std::size_t i, std::size_t j) {
        const StringTuple left = concat_pieces(p, 0, i, n);
        const StringTuple centre = concat_pieces(p, i, j, n);
        const StringTuple right = concat_pieces(p, j, k, n);
        return std::any_of(g.sc_rules.begin(), g.sc_rules.end(), [&](const SCRule& rule) {
            return coercively_disallows(g, rule, left, centre, right);
        });
    };
    for (std::size_t i = 0; i <= k; ++i) {
        for (std::size_t j = i; j <= k; ++j) {
            const bool checked = variant == Variant::spans || (j == i + 1) ||
                                 (variant == Variant::single_or_boundary && j == i);
            if (checked && violated(i, j)) {
                return false;
            }
        }
    }
    return true;
}

bool partition_accepted(const Grammar& g, const Partition& p, Variant variant) {
    return cr_condition_holds(g, p) && sc_condition_holds(g, p, variant);
}

bool oracle_accepts(const Grammar& g, const StringTuple& tuple, Variant variant, OracleOptions options) {
    if (tuple.size() != g.tapes.tapes()) {
        throw Error("tuple has " + std::to_string(tuple.size()) + " components, grammar has " +
                    std::to_string(g.tapes.tapes()) + " tapes");
    }
    for (const auto& w : tuple) {
        if (w.size() > options.max_length) {
            throw Error("component longer than the oracle bound " + std::to_string(options.max_length));
        }
    }
    const auto partitions = enumerate_partitions(tuple, centre_set(g));
    return std::any_of(partitions.begin(), partitions.end(),
                       [&](const Partition& p) { return partition_accepted(g, p, variant); });
}

}  // namespace tlc
