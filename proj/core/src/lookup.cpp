#include "tlc/lookup.hpp"

#include "tlc/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

namespace tlc {

namespace {

struct Config {
    StateId state;
    std::vector<std::size_t> pos;  // per input tape
    StringTuple produced;          // per output tape
    std::size_t insertions;

    friend bool operator<(const Config& a, const Config& b) {
        return std::tie(a.state, a.pos, a.produced, a.insertions) <
               std::tie(b.state, b.pos, b.produced, b.insertions);
    }
};

void check_input(const CompiledRelation& rel, const StringTuple& input, std::size_t first_tape,
                 std::size_t count) {
    if (input.size() != count) {
        throw Error("expected " + std::to_string(count) + " input words, got " + std::to_string(input.size()));
    }
    for (std::size_t i = 0; i < count; ++i) {
        for (SymbolId s : input[i]) {
            if (!alphabet_contains(rel.alphabets()[first_tape + i], s)) {
                throw Error("symbol '" + (s >= 0 && static_cast<std::size_t>(s) < rel.symbols().size()
                                              ? rel.symbols().name(s)
                                              : std::to_string(s)) +
                            "' is not in the alphabet of tape " + std::to_string(first_tape + i + 1));
            }
        }
    }
}

// Reads `input` on tapes [first, first + input.size()) and collects the
// remaining tapes as output.
LookupResult run(const CompiledRelation& rel, const StringTuple& input, std::size_t first, LookupOptions options) {
    const Automaton& m = rel.machine();
    const std::size_t n = rel.tapes();
    const std::size_t length =
        std::accumulate(input.begin(), input.end(), std::size_t{0}, [](std::size_t acc, const Word& w) {
            return acc + w.size();
        });
    const std::size_t bound = options.insertion_bound.value_or(2 * length + 4);

    auto is_input = [&](std::size_t tape) { return tape >= first && tape < first + input.size(); };

    LookupResult result;
    std::set<StringTuple> found;
    std::set<Config> seen;
    std::deque<Config> queue;
    Config start{m.initial(), std::vector<std::size_t>(input.size(), 0), StringTuple(n - input.size()), 0};
    seen.insert(start);
    queue.push_back(std::move(start));
    while (!queue.empty()) {
        Config c = std::move(queue.front());
        queue.pop_front();
        bool done = m.is_final(c.state);
        for (std::size_t i = 0; i < input.size() && done; ++i) {
            done = c.pos[i] == input[i].size();
        }
        if (done) {
            found.insert(c.produced);
        }
        for (const Transition& tr : m.transitions(c.state)) {
            const auto& label = rel.label(tr.symbol);
            Config next{tr.target, c.pos, c.produced, c.insertions};
            bool consumes = false;
            bool fits = true;
            std::size_t out_tape = 0;
            for (std::size_t t = 0; t < n && fits; ++t) {
                const SymbolId s = label[t];
                if (is_input(t)) {
                    const std::size_t i = t - first;
                    if (s == kEpsilon) {
                        continue;
                    }
                    fits = c.pos[i] < input[i].size() && input[i][c.pos[i]] == s;
                    ++next.pos[i];
                    consumes = true;
                } else {
                    if (s != kEpsilon) {
                        next.produced[out_tape].push_back(s);
                    }
                    ++out_tape;
                }
            }
            if (!fits) {
                continue;
            }
            if (!consumes) {
                if (c.insertions == bound) {
                    result.truncated = true;
                    continue;
                }
                ++next.insertions;
            }
            if (seen.insert(next).second) {
                queue.push_back(std::move(next));
            }
        }
    }
    result.outputs.assign(found.begin(), found.end());
    std::sort(result.outputs.begin(), result.outputs.end(),
              [&](const StringTuple& a, const StringTuple& b) { return tuple_less(a, b, rel.symbols()); });
    return result;
}

}  // namespace

bool tuple_less(const StringTuple& a, const StringTuple& b, const SymbolTable& symbols) {
    auto total = [](const StringTuple& t) {
        return std::accumulate(t.begin(), t.end(), std::size_t{0},
                               [](std::size_t acc, const Word& w) { return acc + w.size(); });
    };
    if (total(a) != total(b)) {
        return total(a) < total(b);
    }
    for (std::size_t t = 0; t < std::min(a.size(), b.size()); ++t) {
        if (a[t].size() != b[t].size()) {
            return a[t].size() < b[t].size();
        }
        for (std::size_t i = 0; i < a[t].size(); ++i) {
            if (a[t][i] != b[t][i]) {
                return symbols.name(a[t][i]) < symbols.name(b[t][i]);
            }
        }
    }
    return a.size() < b.size();
}

LookupResult analyze(const CompiledRelation& rel, const StringTuple& surface, LookupOptions options) {
    check_input(rel, surface, rel.lexical_tapes(), rel.surface_tapes());
    return run(rel, surface, rel.lexical_tapes(), options);
}

LookupResult generate(const CompiledRelation& rel, const StringTuple& lexical, LookupOptions options) {
    check_input(rel, lexical, 0, rel.lexical_tapes());
    return run(rel, lexical, 0, options);
}

bool accepts_tuple(const CompiledRelation& rel, const StringTuple& tuple) {
    if (tuple.size() != rel.tapes()) {
        throw Error("expected " + std::to_string(rel.tapes()) + " components, got " + std::to_string(tuple.size()));
    }
    for (std::size_t t = 0; t < tuple.size(); ++t) {
        for (SymbolId s : tuple[t]) {
            if (!alphabet_contains(rel.alphabets()[t], s)) {
                return false;
            }
        }
    }
    // every label consumes something, so the search is finite
    const auto result = run(rel, tuple, 0, LookupOptions{});
    return !result.outputs.empty();
}

}  // namespace tlc
