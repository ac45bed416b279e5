#include "tlc/symbol_table.hpp"

#include "tlc/error.hpp"

#include <algorithm>

namespace tlc {

SymbolId SymbolTable::intern(std::string_view name) {
    if (auto it = ids_.find(std::string(name)); it != ids_.end()) {
        return it->second;
    }
    const auto id = static_cast<SymbolId>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
}

SymbolId SymbolTable::find(std::string_view name) const {
    const auto it = ids_.find(std::string(name));
    return it == ids_.end() ? kEpsilon : it->second;
}

const std::string& SymbolTable::name(SymbolId id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= names_.size()) {
        throw Error("symbol id " + std::to_string(id) + " is not in the symbol table");
    }
    return names_[static_cast<std::size_t>(id)];
}

std::string Diagnostic::to_string() const {
    std::string out = severity == Severity::error ? "error" : "warning";
    if (line > 0) {
        out += " (line " + std::to_string(line) + ")";
    }
    out += ": ";
    out += message;
    return out;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::error; });
}

GrammarError::GrammarError(Diagnostic diagnostic)
    : Error(diagnostic.to_string()), diagnostic_(std::move(diagnostic)) {}

}  // namespace tlc
