// Hopcroft partition refinement over a completed DFA, followed by a
// canonical breadth-first renumbering of the quotient.

#include "tlc/automaton.hpp"

#include <algorithm>
#include <deque>
#include <utility>

namespace tlc {

namespace {

struct CompleteDfa {
    std::size_t states = 0;
    std::size_t symbols = 0;
    std::vector<StateId> delta;  // delta[q * symbols + k]
    std::vector<char> finals;
};

CompleteDfa complete(const Automaton& dfa) {
    const Alphabet& sigma = dfa.alphabet();
    CompleteDfa c;
    c.states = dfa.num_states() + 1;  // last state is the sink
    c.symbols = sigma.size();
    const auto sink = static_cast<StateId>(dfa.num_states());
    c.delta.assign(c.states * c.symbols, sink);
    c.finals.assign(c.states, 0);
    for (std::size_t q = 0; q < dfa.num_states(); ++q) {
        c.finals[q] = dfa.is_final(static_cast<StateId>(q)) ? 1 : 0;
        for (const auto& t : dfa.transitions(static_cast<StateId>(q))) {
            const auto k = static_cast<std::size_t>(std::lower_bound(sigma.begin(), sigma.end(), t.symbol) - sigma.begin());
            c.delta[q * c.symbols + k] = t.target;
        }
    }
    return c;
}

/// Returns the block index of every state.
std::vector<int> hopcroft(const CompleteDfa& c) {
    const std::size_t n = c.states;
    const std::size_t k = c.symbols;

    // inverse[k][q] = predecessors of q on symbol k
    std::vector<std::vector<std::vector<StateId>>> inverse(k, std::vector<std::vector<StateId>>(n));
    for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t s = 0; s < k; ++s) {
            inverse[s][static_cast<std::size_t>(c.delta[q * k + s])].push_back(static_cast<StateId>(q));
        }
    }

    std::vector<std::vector<StateId>> blocks;
    std::vector<int> block_of(n, 0);
    {
        std::vector<StateId> accepting;
        std::vector<StateId> rejecting;
        for (std::size_t q = 0; q < n; ++q) {
            (c.finals[q] != 0 ? accepting : rejecting).push_back(static_cast<StateId>(q));
        }
        for (auto* part : {&rejecting, &accepting}) {
            if (!part->empty()) {
                for (StateId q : *part) {
                    block_of[static_cast<std::size_t>(q)] = static_cast<int>(blocks.size());
                }
                blocks.push_back(std::move(*part));
            }
        }
    }

    std::vector<std::vector<char>> pending;  // pending[block][symbol]
    std::deque<std::pair<int, std::size_t>> work;
    auto enqueue = [&](int block, std::size_t symbol) {
        if (pending[static_cast<std::size_t>(block)][symbol] == 0) {
            pending[static_cast<std::size_t>(block)][symbol] = 1;
            work.emplace_back(block, symbol);
        }
    };
    pending.assign(blocks.size(), std::vector<char>(k, 0));
    if (blocks.size() == 2) {
        const int smaller = blocks[0].size() <= blocks[1].size() ? 0 : 1;
        for (std::size_t s = 0; s < k; ++s) {
            enqueue(smaller, s);
        }
    }

    std::vector<char> marked(n, 0);
    std::vector<std::size_t> hits(n + 1, 0);
    while (!work.empty()) {
        const auto [splitter, symbol] = work.front();
        work.pop_front();
        pending[static_cast<std::size_t>(splitter)][symbol] = 0;

        std::vector<StateId> preimage;
        for (StateId q : blocks[static_cast<std::size_t>(splitter)]) {
            for (StateId p : inverse[symbol][static_cast<std::size_t>(q)]) {
                if (marked[static_cast<std::size_t>(p)] == 0) {
                    marked[static_cast<std::size_t>(p)] = 1;
                    preimage.push_back(p);
                }
            }
        }

        std::vector<int> touched;
        hits.assign(blocks.size(), 0);
        for (StateId p : preimage) {
            const int b = block_of[static_cast<std::size_t>(p)];
            if (hits[static_cast<std::size_t>(b)]++ == 0) {
                touched.push_back(b);
            }
        }

        for (int b : touched) {
            auto& members = blocks[static_cast<std::size_t>(b)];
            if (hits[static_cast<std::size_t>(b)] == members.size()) {
                continue;
            }
            std::vector<StateId> inside;
            std::vector<StateId> outside;
            for (StateId q : members) {
                (marked[static_cast<std::size_t>(q)] != 0 ? inside : outside).push_back(q);
            }
            const int fresh = static_cast<int>(blocks.size());
            members = std::move(outside);
            for (StateId q : inside) {
                block_of[static_cast<std::size_t>(q)] = fresh;
            }
            blocks.push_back(std::move(inside));
            pending.emplace_back(k, 0);

            const std::size_t old_size = blocks[static_cast<std::size_t>(b)].size();
            const std::size_t new_size = blocks[static_cast<std::size_t>(fresh)].size();
            for (std::size_t s = 0; s < k; ++s) {
                if (pending[static_cast<std::size_t>(b)][s] != 0) {
                    enqueue(fresh, s);
                } else {
                    enqueue(new_size <= old_size ? fresh : b, s);
                }
            }
        }

        for (StateId p : preimage) {
            marked[static_cast<std::size_t>(p)] = 0;
        }
    }
    return block_of;
}

/// Renumbers states in breadth-first order from the initial state, visiting
/// transitions in symbol order. Two isomorphic DFAs get identical layouts.
Automaton canonical_order(const Automaton& dfa) {
    std::vector<StateId> map(dfa.num_states(), -1);
    std::vector<StateId> order{dfa.initial()};
    map[static_cast<std::size_t>(dfa.initial())] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::vector<Transition> moves(dfa.transitions(order[i]).begin(), dfa.transitions(order[i]).end());
        std::sort(moves.begin(), moves.end());
        for (const auto& t : moves) {
            if (map[static_cast<std::size_t>(t.target)] < 0) {
                map[static_cast<std::size_t>(t.target)] = static_cast<StateId>(order.size());
                order.push_back(t.target);
            }
        }
    }
    Automaton out(dfa.alphabet());
    out.set_final(0, dfa.is_final(order[0]));
    for (std::size_t i = 1; i < order.size(); ++i) {
        out.add_state(dfa.is_final(order[i]));
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (const auto& t : dfa.transitions(order[i])) {
            out.add_transition(static_cast<StateId>(i), t.symbol, map[static_cast<std::size_t>(t.target)]);
        }
    }
    out.normalize();
    out.mark_deterministic();
    return out;
}

}  // namespace

Automaton minimize(const Automaton& a) {
    const Automaton dfa = a.is_deterministic() ? trim(a) : determinize(a);
    const CompleteDfa c = complete(dfa);
    const std::vector<int> block_of = hopcroft(c);

    int blocks = 0;
    for (int b : block_of) {
        blocks = std::max(blocks, b + 1);
    }
    Automaton quotient(dfa.alphabet());
    for (int b = 1; b < blocks; ++b) {
        quotient.add_state();
    }
    std::vector<char> done(static_cast<std::size_t>(blocks), 0);
    for (std::size_t q = 0; q < c.states; ++q) {
        const int b = block_of[q];
        if (done[static_cast<std::size_t>(b)] != 0) {
            continue;
        }
        done[static_cast<std::size_t>(b)] = 1;
        quotient.set_final(b, c.finals[q] != 0);
        for (std::size_t s = 0; s < c.symbols; ++s) {
            quotient.add_transition(b, dfa.alphabet()[s], block_of[static_cast<std::size_t>(c.delta[q * c.symbols + s])]);
        }
    }
    quotient.set_initial(block_of[static_cast<std::size_t>(dfa.initial())]);
    quotient.mark_deterministic();
    return canonical_order(trim(quotient));
}

}  // namespace tlc
