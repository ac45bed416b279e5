#pragma once

#include "tlc/grammar.hpp"
#include "tlc/oracle.hpp"
#include "tlc/relation.hpp"
#include "tlc/variant.hpp"

#include <cstddef>
#include <functional>
#include <optional>

namespace tlc {

using CompileFn = std::function<CompiledRelation(const Grammar&, Variant)>;

struct CheckOptions {
    std::size_t bound = 4;  // per-tape length
    Variant variant = Variant::spans;
    /// The compiler under test; compile_relation when empty.
    CompileFn compile;
};

struct CheckResult {
    std::size_t tuples_checked = 0;
    /// First tuple, in enumeration order, on which relation and oracle disagree.
    std::optional<StringTuple> counterexample;
    bool relation_accepts = false;  // verdicts on the counterexample
    bool oracle_accepts = false;

    [[nodiscard]] bool equivalent() const { return !counterexample; }
};

/// Calls fn on every tuple whose components have length <= bound. Each tape
/// runs through its words shortest first, the last tape varying fastest.
/// Stops early when fn returns false.
void for_each_tuple(const TapeConfig& tapes, std::size_t bound, const std::function<bool(const StringTuple&)>& fn);

/// Compares the compiled relation with the oracle on every tuple within the bound.
[[nodiscard]] CheckResult check_equivalence(const Grammar& g, const CheckOptions& options = {});

}  // namespace tlc
