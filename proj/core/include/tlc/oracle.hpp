#pragma once

#include "tlc/grammar.hpp"
#include "tlc/variant.hpp"

#include <cstddef>
#include <vector>

namespace tlc {

/// Pieces whose tape-wise concatenation is the analysed tuple.
struct Partition {
    std::vector<StringTuple> pieces;

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Whole-word membership by direct interpretation of the expression tree.
/// `sigma` is the tape alphabet that `.` and complement refer to. Sub and
/// per-tape products are not supported and throw tlc::Error.
[[nodiscard]] bool regex_matches(const Regex& expr, std::span<const SymbolId> word, const Alphabet& sigma);

/// Every split of `tuple` into centre tuples. An empty piece may appear at
/// most once between two non-empty ones, which keeps the list finite without
/// losing any acceptance verdict.
[[nodiscard]] std::vector<Partition> enumerate_partitions(const StringTuple& tuple,
                                                          const std::vector<StringTuple>& centres);

/// Left fields are matched against suffixes and right fields against
/// prefixes, per tape; an omitted field matches anything.
[[nodiscard]] bool contextually_allows(const Grammar& g, const CRRule& rule, const StringTuple& left,
                                       const StringTuple& centre, const StringTuple& right);
[[nodiscard]] bool coercively_disallows(const Grammar& g, const SCRule& rule, const StringTuple& left,
                                        const StringTuple& centre, const StringTuple& right);

/// Condition (1): every piece is allowed by some CR rule in its surroundings.
[[nodiscard]] bool cr_condition_holds(const Grammar& g, const Partition& p);
/// Condition (2) in the chosen variant: no span is coercively disallowed.
[[nodiscard]] bool sc_condition_holds(const Grammar& g, const Partition& p, Variant variant);
[[nodiscard]] bool partition_accepted(const Grammar& g, const Partition& p, Variant variant);

struct OracleOptions {
    std::size_t max_length = 6;  // per tape
};

/// True iff some partition of `tuple` satisfies both conditions. Throws
/// tlc::Error when a component is longer than options.max_length.
[[nodiscard]] bool oracle_accepts(const Grammar& g, const StringTuple& tuple, Variant variant = Variant::spans,
                                  OracleOptions options = {});

/// Tape-wise concatenation of pieces [first, last).
[[nodiscard]] StringTuple concat_pieces(const Partition& p, std::size_t first, std::size_t last, std::size_t tapes);

}  // namespace tlc
