#pragma once

#include "tlc/check.hpp"
#include "tlc/variant.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace tlc::cli {

struct Io {
    std::ostream& out;
    std::ostream& err;
    bool color = false;
};

struct Config {
    Variant variant = Variant::spans;
    std::size_t bound = 4;                        // oracle length bound for `check`
    std::optional<std::size_t> insertion_bound;   // for `lookup`
    std::optional<std::string> snapshot_dir;      // `compile --snapshots DIR`
    bool dot = false;
    std::optional<std::string> output;            // `compile -o FILE`; stdout otherwise
};

/// True unless TLC_COLOR=0; TLC_COLOR=1 forces colour, otherwise colour
/// follows whether stderr is a terminal.
[[nodiscard]] bool color_from_environment();

int cmd_compile(const std::string& grammar_path, const Config& config, Io& io);
/// `input` holds one argument whose comma-separated components are the
/// words of the input tapes.
int cmd_lookup(const std::string& relation_path, const std::string& direction, const std::string& input,
               const Config& config, Io& io);
/// `compile` replaces the compiler under test, for harness self-tests.
int cmd_check(const std::string& grammar_path, const Config& config, Io& io, const CompileFn& compile = {});
int cmd_dump(const std::string& path, const Config& config, Io& io);

/// Parses the command line and dispatches. Returns the exit status.
int run(int argc, const char* const* argv, Io& io);

}  // namespace tlc::cli
