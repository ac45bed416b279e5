#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tlc {

using SymbolId = std::int32_t;

/// Marks an epsilon move in transition lists and an empty component in tuple labels.
inline constexpr SymbolId kEpsilon = -1;

/// Interns printable symbol names to dense ids. One table per compilation;
/// ids are stable for the lifetime of the table.
class SymbolTable {
public:
    SymbolId intern(std::string_view name);

    /// Returns kEpsilon when the name is unknown.
    [[nodiscard]] SymbolId find(std::string_view name) const;
    [[nodiscard]] bool contains(std::string_view name) const { return find(name) != kEpsilon; }

    [[nodiscard]] const std::string& name(SymbolId id) const;
    [[nodiscard]] std::size_t size() const { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, SymbolId> ids_;
};

}  // namespace tlc
