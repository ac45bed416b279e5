#pragma once

#include <string_view>

namespace tlc {

/// Which spans of a partition an SC rule is checked against.
enum class Variant {
    spans,              // any run of zero or more adjacent partitions ("2")
    single,             // exactly one partition ("2i")
    single_or_boundary  // one partition or the empty run at a boundary ("2ii")
};

/// Accepts "2", "2i" and "2ii". Throws tlc::Error otherwise.
[[nodiscard]] Variant parse_variant(std::string_view text);
[[nodiscard]] std::string_view to_string(Variant variant);

}  // namespace tlc
