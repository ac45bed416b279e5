#include "tlc/calculus.hpp"

#include "tlc/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

namespace tlc {

void TupleAlphabet::add(TupleSymbol symbol) {
    if (symbol.components.size() != arity_) {
        throw Error("tuple symbol arity " + std::to_string(symbol.components.size()) + " does not match alphabet arity " +
                    std::to_string(arity_));
    }
    if (find(symbol.id) != nullptr) {
        return;
    }
    symbols_.push_back(std::move(symbol));
}

Alphabet TupleAlphabet::ids() const {
    std::vector<SymbolId> out;
    out.reserve(symbols_.size());
    for (const auto& t : symbols_) {
        out.push_back(t.id);
    }
    return make_alphabet(std::move(out));
}

const TupleSymbol* TupleAlphabet::find(std::span<const SymbolId> components) const {
    for (const auto& t : symbols_) {
        if (std::equal(t.components.begin(), t.components.end(), components.begin(), components.end())) {
            return &t;
        }
    }
    return nullptr;
}

const TupleSymbol* TupleAlphabet::find(SymbolId id) const {
    for (const auto& t : symbols_) {
        if (t.id == id) {
            return &t;
        }
    }
    return nullptr;
}

Automaton intro(const Alphabet& inserted, const Automaton& a) {
    Automaton out = a;
    out.extend_alphabet(inserted);
    for (std::size_t q = 0; q < out.num_states(); ++q) {
        for (SymbolId s : inserted) {
            out.add_transition(static_cast<StateId>(q), s, static_cast<StateId>(q));
        }
    }
    out.normalize();
    return trim(out);
}

Automaton sub(const Automaton& replacement, std::span<const SymbolId> target, const Automaton& a) {
    if (target.empty()) {
        throw Error("sub: the replaced word must be non-empty");
    }
    const Automaton source = determinize(a);
    const std::size_t n = source.num_states();

    Automaton out = source;
    out.extend_alphabet(replacement.alphabet());

    // For every state q' that ends a target occurrence, one copy of the
    // replacement automaton whose final states lead to q'.
    std::map<StateId, StateId> copy_start;
    for (std::size_t q = 0; q < n; ++q) {
        StateId end = static_cast<StateId>(q);
        for (SymbolId s : target) {
            end = source.step(end, s);
            if (end < 0) {
                break;
            }
        }
        if (end < 0) {
            continue;
        }
        auto [it, inserted] = copy_start.emplace(end, 0);
        if (inserted) {
            const auto offset = static_cast<StateId>(out.num_states());
            for (std::size_t r = 0; r < replacement.num_states(); ++r) {
                out.add_state(false);
            }
            for (std::size_t r = 0; r < replacement.num_states(); ++r) {
                const auto rs = static_cast<StateId>(r);
                for (const auto& t : replacement.transitions(rs)) {
                    out.add_transition(rs + offset, t.symbol, t.target + offset);
                }
                if (replacement.is_final(rs)) {
                    out.add_transition(rs + offset, kEpsilon, end);
                }
            }
            it->second = replacement.initial() + offset;
        }
        out.add_transition(static_cast<StateId>(q), kEpsilon, it->second);
    }
    return trim(out);
}

Automaton tuple_product(std::span<const Automaton> per_tape, const TupleAlphabet& pi) {
    if (per_tape.size() != pi.arity()) {
        throw Error("tuple_product: got " + std::to_string(per_tape.size()) + " tape automata for arity " +
                    std::to_string(pi.arity()));
    }
    std::vector<Automaton> tapes;
    tapes.reserve(per_tape.size());
    for (const auto& a : per_tape) {
        tapes.push_back(a.is_deterministic() ? a : determinize(a));
    }

    using Key = std::vector<StateId>;
    auto accepting = [&](const Key& key) {
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (!tapes[i].is_final(key[i])) {
                return false;
            }
        }
        return true;
    };

    Automaton out(pi.ids());
    std::map<Key, StateId> ids;
    std::deque<Key> queue;
    Key start;
    for (const auto& t : tapes) {
        start.push_back(t.initial());
    }
    ids.emplace(start, 0);
    out.set_final(0, accepting(start));
    queue.push_back(start);

    while (!queue.empty()) {
        const Key current = std::move(queue.front());
        queue.pop_front();
        const StateId src = ids.at(current);
        for (const auto& column : pi.symbols()) {
            Key next(current.size());
            bool defined = true;
            for (std::size_t i = 0; i < current.size() && defined; ++i) {
                next[i] = tapes[i].step(current[i], column.components[i]);
                defined = next[i] >= 0;
            }
            if (!defined) {
                continue;
            }
            auto [it, inserted] = ids.emplace(next, 0);
            if (inserted) {
                it->second = out.add_state(accepting(next));
                queue.push_back(next);
            }
            out.add_transition(src, column.id, it->second);
        }
    }
    out.mark_deterministic();
    return trim(out);
}

}  // namespace tlc
