#include "tlc/automaton.hpp"

#include "tlc/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>

namespace tlc {

Alphabet make_alphabet(std::vector<SymbolId> symbols) {
    std::sort(symbols.begin(), symbols.end());
    symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
    return symbols;
}

Alphabet alphabet_union(const Alphabet& a, const Alphabet& b) {
    Alphabet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool alphabet_contains(const Alphabet& alphabet, SymbolId symbol) {
    return std::binary_search(alphabet.begin(), alphabet.end(), symbol);
}

// ---- Automaton -------------------------------------------------------------

Automaton::Automaton(Alphabet alphabet) : alphabet_(make_alphabet(std::move(alphabet))) {
    add_state(false);
}

StateId Automaton::add_state(bool final) {
    transitions_.emplace_back();
    finals_.push_back(final ? 1 : 0);
    return static_cast<StateId>(transitions_.size() - 1);
}

void Automaton::add_transition(StateId source, SymbolId symbol, StateId target) {
    if (symbol != kEpsilon && !alphabet_contains(alphabet_, symbol)) {
        throw AlphabetError("transition symbol " + std::to_string(symbol) + " is not in the declared alphabet");
    }
    const auto n = static_cast<StateId>(num_states());
    if (source < 0 || source >= n || target < 0 || target >= n) {
        throw std::out_of_range("transition endpoint out of range");
    }
    transitions_[static_cast<std::size_t>(source)].push_back({symbol, target});
    deterministic_ = false;
}

void Automaton::set_final(StateId state, bool final) { finals_.at(static_cast<std::size_t>(state)) = final ? 1 : 0; }

void Automaton::set_initial(StateId state) {
    if (state < 0 || static_cast<std::size_t>(state) >= num_states()) {
        throw std::out_of_range("initial state out of range");
    }
    initial_ = state;
}

void Automaton::extend_alphabet(const Alphabet& symbols) { alphabet_ = alphabet_union(alphabet_, symbols); }

std::size_t Automaton::num_transitions() const {
    std::size_t total = 0;
    for (const auto& out : transitions_) {
        total += out.size();
    }
    return total;
}

std::vector<StateId> Automaton::final_states() const {
    std::vector<StateId> out;
    for (std::size_t q = 0; q < finals_.size(); ++q) {
        if (finals_[q] != 0) {
            out.push_back(static_cast<StateId>(q));
        }
    }
    return out;
}

bool Automaton::has_deterministic_structure() const {
    for (const auto& out : transitions_) {
        std::vector<SymbolId> seen;
        seen.reserve(out.size());
        for (const auto& t : out) {
            if (t.symbol == kEpsilon) {
                return false;
            }
            seen.push_back(t.symbol);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
            return false;
        }
    }
    return true;
}

void Automaton::mark_deterministic() {
    if (!has_deterministic_structure()) {
        throw std::logic_error("automaton has epsilon moves or duplicate symbols on a state");
    }
    deterministic_ = true;
}

StateId Automaton::step(StateId state, SymbolId symbol) const {
    for (const auto& t : transitions(state)) {
        if (t.symbol == symbol) {
            return t.target;
        }
    }
    return -1;
}

void Automaton::normalize() {
    for (auto& out : transitions_) {
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
}

// ---- helpers -----------------------------------------------------------------

namespace {

using StateSet = std::vector<StateId>;

void epsilon_close(const Automaton& a, StateSet& set) {
    std::vector<char> in(a.num_states(), 0);
    std::vector<StateId> stack;
    for (StateId q : set) {
        in[static_cast<std::size_t>(q)] = 1;
        stack.push_back(q);
    }
    while (!stack.empty()) {
        const StateId q = stack.back();
        stack.pop_back();
        for (const auto& t : a.transitions(q)) {
            if (t.symbol == kEpsilon && in[static_cast<std::size_t>(t.target)] == 0) {
                in[static_cast<std::size_t>(t.target)] = 1;
                set.push_back(t.target);
                stack.push_back(t.target);
            }
        }
    }
    std::sort(set.begin(), set.end());
}

bool any_final(const Automaton& a, const StateSet& set) {
    return std::any_of(set.begin(), set.end(), [&](StateId q) { return a.is_final(q); });
}

/// Copies the states of src into dst with ids shifted by the returned offset.
StateId embed(Automaton& dst, const Automaton& src) {
    const auto offset = static_cast<StateId>(dst.num_states());
    for (std::size_t q = 0; q < src.num_states(); ++q) {
        dst.add_state(src.is_final(static_cast<StateId>(q)));
    }
    for (std::size_t q = 0; q < src.num_states(); ++q) {
        for (const auto& t : src.transitions(static_cast<StateId>(q))) {
            dst.add_transition(static_cast<StateId>(q) + offset, t.symbol, t.target + offset);
        }
    }
    return offset;
}

const Automaton& as_dfa(const Automaton& a, Automaton& storage) {
    if (a.is_deterministic()) {
        return a;
    }
    storage = determinize(a);
    return storage;
}

enum class ProductMode { intersection, difference };

/// Product of two DFAs. For difference, a missing transition on the right
/// operand goes to an implicit non-accepting sink (-1).
Automaton product(const Automaton& lhs, const Automaton& rhs, ProductMode mode) {
    Automaton ls{};
    Automaton rs{};
    const Automaton& a = as_dfa(lhs, ls);
    const Automaton& b = as_dfa(rhs, rs);

    Automaton out(alphabet_union(a.alphabet(), b.alphabet()));
    std::map<std::pair<StateId, StateId>, StateId> ids;
    std::deque<std::pair<StateId, StateId>> queue;

    auto accepting = [&](StateId p, StateId q) {
        const bool in_b = q >= 0 && b.is_final(q);
        return mode == ProductMode::intersection ? a.is_final(p) && in_b : a.is_final(p) && !in_b;
    };

    const std::pair<StateId, StateId> start{a.initial(), b.initial()};
    ids.emplace(start, 0);
    out.set_final(0, accepting(start.first, start.second));
    queue.push_back(start);

    while (!queue.empty()) {
        const auto [p, q] = queue.front();
        queue.pop_front();
        const StateId src = ids.at({p, q});
        for (const auto& t : a.transitions(p)) {
            const StateId q2 = q >= 0 ? b.step(q, t.symbol) : -1;
            if (q2 < 0 && mode == ProductMode::intersection) {
                continue;
            }
            const std::pair<StateId, StateId> key{t.target, q2};
            auto [it, inserted] = ids.emplace(key, 0);
            if (inserted) {
                it->second = out.add_state(accepting(key.first, key.second));
                queue.push_back(key);
            }
            out.add_transition(src, t.symbol, it->second);
        }
    }
    out.mark_deterministic();
    return trim(out);
}

}  // namespace

// ---- basic languages -------------------------------------------------------

Automaton empty_language(const Alphabet& alphabet) {
    Automaton a(alphabet);
    a.mark_deterministic();
    return a;
}

Automaton epsilon_language(const Alphabet& alphabet) {
    Automaton a(alphabet);
    a.set_final(0);
    a.mark_deterministic();
    return a;
}

Automaton symbol_language(SymbolId symbol, const Alphabet& alphabet) {
    const SymbolId one[] = {symbol};
    return word_language(one, alphabet);
}

Automaton word_language(std::span<const SymbolId> word, const Alphabet& alphabet) {
    Automaton a(alphabet);
    StateId q = a.initial();
    for (SymbolId s : word) {
        const StateId next = a.add_state();
        a.add_transition(q, s, next);
        q = next;
    }
    a.set_final(q);
    a.mark_deterministic();
    return a;
}

Automaton any_symbol_language(const Alphabet& alphabet) {
    Automaton a(alphabet);
    const StateId end = a.add_state(true);
    for (SymbolId s : a.alphabet()) {
        a.add_transition(a.initial(), s, end);
    }
    a.mark_deterministic();
    return a;
}

Automaton universal_language(const Alphabet& alphabet) {
    Automaton a(alphabet);
    a.set_final(0);
    for (SymbolId s : a.alphabet()) {
        a.add_transition(0, s, 0);
    }
    a.mark_deterministic();
    return a;
}

// ---- regular operations ----------------------------------------------------

Automaton concat(const Automaton& a, const Automaton& b) {
    Automaton out(alphabet_union(a.alphabet(), b.alphabet()));
    const StateId oa = embed(out, a);
    const StateId ob = embed(out, b);
    out.add_transition(0, kEpsilon, a.initial() + oa);
    for (StateId f : a.final_states()) {
        out.set_final(f + oa, false);
        out.add_transition(f + oa, kEpsilon, b.initial() + ob);
    }
    return trim(out);
}

Automaton unite(const Automaton& a, const Automaton& b) {
    Automaton out(alphabet_union(a.alphabet(), b.alphabet()));
    const StateId oa = embed(out, a);
    const StateId ob = embed(out, b);
    out.add_transition(0, kEpsilon, a.initial() + oa);
    out.add_transition(0, kEpsilon, b.initial() + ob);
    return trim(out);
}

Automaton star(const Automaton& a) {
    Automaton out(a.alphabet());
    out.set_final(0);
    const StateId off = embed(out, a);
    out.add_transition(0, kEpsilon, a.initial() + off);
    for (StateId f : a.final_states()) {
        out.add_transition(f + off, kEpsilon, 0);
    }
    return trim(out);
}

Automaton plus(const Automaton& a) { return concat(a, star(a)); }

Automaton optional(const Automaton& a) { return unite(a, epsilon_language(a.alphabet())); }

Automaton intersect(const Automaton& a, const Automaton& b) { return product(a, b, ProductMode::intersection); }

Automaton difference(const Automaton& a, const Automaton& b) { return product(a, b, ProductMode::difference); }

Automaton complement(const Automaton& a, const Alphabet& alphabet) {
    const Alphabet universe = make_alphabet(alphabet);
    for (SymbolId s : a.alphabet()) {
        if (!alphabet_contains(universe, s)) {
            throw AlphabetError("complement: operand symbol " + std::to_string(s) +
                                " is outside the complement alphabet");
        }
    }
    return difference(universal_language(universe), a);
}

Automaton reverse(const Automaton& a) {
    Automaton out(a.alphabet());  // state 0 is the new initial state
    std::vector<StateId> map(a.num_states());
    for (std::size_t q = 0; q < a.num_states(); ++q) {
        map[q] = out.add_state(static_cast<StateId>(q) == a.initial());
    }
    for (std::size_t q = 0; q < a.num_states(); ++q) {
        for (const auto& t : a.transitions(static_cast<StateId>(q))) {
            out.add_transition(map[static_cast<std::size_t>(t.target)], t.symbol, map[q]);
        }
        if (a.is_final(static_cast<StateId>(q))) {
            out.add_transition(0, kEpsilon, map[q]);
        }
    }
    return trim(out);
}

Automaton map_symbols(const Automaton& a, const std::function<SymbolId(SymbolId)>& relabel,
                      const Alphabet& new_alphabet) {
    Automaton out(new_alphabet);
    for (std::size_t q = 1; q < a.num_states(); ++q) {
        out.add_state();
    }
    for (std::size_t q = 0; q < a.num_states(); ++q) {
        const auto state = static_cast<StateId>(q);
        out.set_final(state, a.is_final(state));
        for (const auto& t : a.transitions(state)) {
            out.add_transition(state, t.symbol == kEpsilon ? kEpsilon : relabel(t.symbol), t.target);
        }
    }
    out.set_initial(a.initial());
    return trim(out);
}

// ---- normal forms ----------------------------------------------------------

Automaton trim(const Automaton& a) {
    const std::size_t n = a.num_states();
    std::vector<char> reachable(n, 0);
    std::vector<StateId> order;
    std::deque<StateId> queue{a.initial()};
    reachable[static_cast<std::size_t>(a.initial())] = 1;
    while (!queue.empty()) {
        const StateId q = queue.front();
        queue.pop_front();
        order.push_back(q);
        for (const auto& t : a.transitions(q)) {
            if (reachable[static_cast<std::size_t>(t.target)] == 0) {
                reachable[static_cast<std::size_t>(t.target)] = 1;
                queue.push_back(t.target);
            }
        }
    }

    std::vector<std::vector<StateId>> preds(n);
    for (std::size_t q = 0; q < n; ++q) {
        for (const auto& t : a.transitions(static_cast<StateId>(q))) {
            preds[static_cast<std::size_t>(t.target)].push_back(static_cast<StateId>(q));
        }
    }
    std::vector<char> live(n, 0);
    std::vector<StateId> stack;
    for (std::size_t q = 0; q < n; ++q) {
        if (a.is_final(static_cast<StateId>(q))) {
            live[q] = 1;
            stack.push_back(static_cast<StateId>(q));
        }
    }
    while (!stack.empty()) {
        const StateId q = stack.back();
        stack.pop_back();
        for (StateId p : preds[static_cast<std::size_t>(q)]) {
            if (live[static_cast<std::size_t>(p)] == 0) {
                live[static_cast<std::size_t>(p)] = 1;
                stack.push_back(p);
            }
        }
    }

    std::vector<StateId> map(n, -1);
    Automaton out(a.alphabet());
    map[static_cast<std::size_t>(a.initial())] = 0;
    out.set_final(0, a.is_final(a.initial()));
    for (StateId q : order) {
        if (q != a.initial() && live[static_cast<std::size_t>(q)] != 0) {
            map[static_cast<std::size_t>(q)] = out.add_state(a.is_final(q));
        }
    }
    for (StateId q : order) {
        const StateId src = map[static_cast<std::size_t>(q)];
        if (src < 0) {
            continue;
        }
        for (const auto& t : a.transitions(q)) {
            const StateId dst = map[static_cast<std::size_t>(t.target)];
            if (dst >= 0 && live[static_cast<std::size_t>(t.target)] != 0) {
                out.add_transition(src, t.symbol, dst);
            }
        }
    }
    out.normalize();
    if (a.is_deterministic()) {
        out.mark_deterministic();
    }
    return out;
}

Automaton determinize(const Automaton& a) {
    Automaton out(a.alphabet());
    std::map<StateSet, StateId> ids;
    std::deque<StateSet> queue;

    StateSet start{a.initial()};
    epsilon_close(a, start);
    ids.emplace(start, 0);
    out.set_final(0, any_final(a, start));
    queue.push_back(start);

    while (!queue.empty()) {
        const StateSet current = std::move(queue.front());
        queue.pop_front();
        const StateId src = ids.at(current);

        std::map<SymbolId, StateSet> moves;
        for (StateId q : current) {
            for (const auto& t : a.transitions(q)) {
                if (t.symbol != kEpsilon) {
                    moves[t.symbol].push_back(t.target);
                }
            }
        }
        for (auto& [symbol, targets] : moves) {
            std::sort(targets.begin(), targets.end());
            targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
            epsilon_close(a, targets);
            auto [it, inserted] = ids.emplace(targets, 0);
            if (inserted) {
                it->second = out.add_state(any_final(a, targets));
                queue.push_back(targets);
            }
            out.add_transition(src, symbol, it->second);
        }
    }
    out.mark_deterministic();
    return trim(out);
}

// ---- queries ---------------------------------------------------------------

bool accepts(const Automaton& a, std::span<const SymbolId> word) {
    StateSet current{a.initial()};
    epsilon_close(a, current);
    for (SymbolId s : word) {
        if (!alphabet_contains(a.alphabet(), s)) {
            throw AlphabetError("word symbol " + std::to_string(s) + " is not in the automaton alphabet");
        }
        StateSet next;
        for (StateId q : current) {
            for (const auto& t : a.transitions(q)) {
                if (t.symbol == s) {
                    next.push_back(t.target);
                }
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        epsilon_close(a, next);
        current = std::move(next);
        if (current.empty()) {
            return false;
        }
    }
    return any_final(a, current);
}

bool is_empty(const Automaton& a) {
    const Automaton t = trim(a);
    return !t.is_final(t.initial()) && t.num_transitions() == 0;
}

bool is_subset(const Automaton& a, const Automaton& b) { return is_empty(difference(a, b)); }

bool equivalent(const Automaton& a, const Automaton& b) { return is_subset(a, b) && is_subset(b, a); }

std::vector<Word> enumerate(const Automaton& a, std::size_t max_len) {
    Automaton storage{};
    const Automaton& dfa = as_dfa(a, storage);

    std::vector<Word> out;
    std::vector<std::pair<Word, StateId>> level{{Word{}, dfa.initial()}};
    for (std::size_t len = 0; len <= max_len && !level.empty(); ++len) {
        std::vector<std::pair<Word, StateId>> next;
        for (auto& [word, q] : level) {
            if (dfa.is_final(q)) {
                out.push_back(word);
            }
            if (len == max_len) {
                continue;
            }
            std::vector<Transition> moves(dfa.transitions(q).begin(), dfa.transitions(q).end());
            std::sort(moves.begin(), moves.end());
            for (const auto& t : moves) {
                Word extended = word;
                extended.push_back(t.symbol);
                next.emplace_back(std::move(extended), t.target);
            }
        }
        level = std::move(next);
    }
    return out;
}

}  // namespace tlc
