#include "tlc/check.hpp"

#include "tlc/compiler.hpp"
#include "tlc/lookup.hpp"

namespace tlc {

namespace {

std::vector<Word> words_up_to(const Alphabet& sigma, std::size_t bound) {
    std::vector<Word> out{Word{}};
    std::size_t level_start = 0;
    for (std::size_t len = 1; len <= bound; ++len) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_start; i < level_end; ++i) {
            for (SymbolId s : sigma) {
                Word w = out[i];
                w.push_back(s);
                out.push_back(std::move(w));
            }
        }
        level_start = level_end;
    }
    return out;
}

}  // namespace

void for_each_tuple(const TapeConfig& tapes, std::size_t bound, const std::function<bool(const StringTuple&)>& fn) {
    std::vector<std::vector<Word>> per_tape;
    for (const auto& sigma : tapes.alphabets) {
        per_tape.push_back(words_up_to(sigma, bound));
    }
    std::vector<std::size_t> index(per_tape.size(), 0);
    StringTuple tuple(per_tape.size());
    while (true) {
        for (std::size_t t = 0; t < per_tape.size(); ++t) {
            tuple[t] = per_tape[t][index[t]];
        }
        if (!fn(tuple)) {
            return;
        }
        // odometer with the last tape varying fastest
        std::size_t t = per_tape.size();
        while (t > 0) {
            --t;
            if (++index[t] < per_tape[t].size()) {
                break;
            }
            index[t] = 0;
            if (t == 0) {
                return;
            }
        }
        if (per_tape.empty()) {
            return;
        }
    }
}

CheckResult check_equivalence(const Grammar& g, const CheckOptions& options) {
    const CompiledRelation rel =
        options.compile ? options.compile(g, options.variant) : compile_relation(g, options.variant);
    const OracleOptions oracle_options{options.bound};
    CheckResult result;
    for_each_tuple(g.tapes, options.bound, [&](const StringTuple& tuple) {
        ++result.tuples_checked;
        const bool compiled = accepts_tuple(rel, tuple);
        const bool expected = oracle_accepts(g, tuple, options.variant, oracle_options);
        if (compiled != expected) {
            result.counterexample = tuple;
            result.relation_accepts = compiled;
            result.oracle_accepts = expected;
            return false;
        }
        return true;
    });
    return result;
}

}  // namespace tlc
