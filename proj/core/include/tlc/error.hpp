#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tlc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an automaton operation receives symbols outside the alphabet it was given.
class AlphabetError : public Error {
public:
    using Error::Error;
};

enum class Severity { warning, error };

struct Diagnostic {
    Severity severity = Severity::error;
    int line = 0;  // 1-based; 0 when not tied to a source line
    std::string message;

    [[nodiscard]] std::string to_string() const;
};

[[nodiscard]] bool has_errors(const std::vector<Diagnostic>& diagnostics);

/// Grammar parse or validation failure. Carries the offending diagnostic.
class GrammarError : public Error {
public:
    explicit GrammarError(Diagnostic diagnostic);

    [[nodiscard]] const Diagnostic& diagnostic() const { return diagnostic_; }

private:
    Diagnostic diagnostic_;
};

}  // namespace tlc
