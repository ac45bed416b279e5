#pragma once

#include "tlc/grammar.hpp"
#include "tlc/relation.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tlc {

struct LookupResult {
    /// Distinct outputs, ordered by total length, then tape by tape by
    /// length and symbol names.
    std::vector<StringTuple> outputs;
    /// Set when some path was cut by the insertion bound; when false the
    /// list is exhaustive.
    bool truncated = false;
};

struct LookupOptions {
    /// Maximum number of steps that consume nothing from the input tapes.
    /// Defaults to twice the input length plus four.
    std::optional<std::size_t> insertion_bound;
};

/// Surface tuple (one word per surface tape) to lexical tuples.
[[nodiscard]] LookupResult analyze(const CompiledRelation& rel, const StringTuple& surface, LookupOptions options = {});
/// Lexical tuple to surface tuples.
[[nodiscard]] LookupResult generate(const CompiledRelation& rel, const StringTuple& lexical, LookupOptions options = {});
/// Membership of a full n-tuple. Throws tlc::Error on a wrong component count.
[[nodiscard]] bool accepts_tuple(const CompiledRelation& rel, const StringTuple& tuple);

/// The output order used by LookupResult.
[[nodiscard]] bool tuple_less(const StringTuple& a, const StringTuple& b, const SymbolTable& symbols);

}  // namespace tlc
