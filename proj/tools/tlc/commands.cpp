#include "tlc/commands.hpp"

#include "tlc/automaton_io.hpp"
#include "tlc/compiler.hpp"
#include "tlc/error.hpp"
#include "tlc/grammar.hpp"
#include "tlc/lookup.hpp"
#include "tlc/relation.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace tlc::cli {

namespace {

constexpr const char* kRed = "\033[31m";
constexpr const char* kYellow = "\033[33m";
constexpr const char* kReset = "\033[0m";

void report(Io& io, Severity severity, const std::string& text) {
    const bool error = severity == Severity::error;
    if (io.color) {
        io.err << (error ? kRed : kYellow);
    }
    io.err << text;
    if (io.color) {
        io.err << kReset;
    }
    io.err << '\n';
}

void report_error(Io& io, const std::string& message) { report(io, Severity::error, "error: " + message); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

// Parses and validates; reports every diagnostic. Empty on error.
std::optional<Grammar> load_grammar(const std::string& path, Io& io) {
    std::vector<Diagnostic> warnings;
    Grammar g;
    try {
        g = parse_grammar(read_file(path), &warnings);
    } catch (const GrammarError& e) {
        for (const auto& w : warnings) {
            report(io, w.severity, path + ": " + w.to_string());
        }
        report(io, Severity::error, path + ": " + e.diagnostic().to_string());
        return std::nullopt;
    }
    std::vector<Diagnostic> all = warnings;
    const auto checks = validate(g);
    all.insert(all.end(), checks.begin(), checks.end());
    for (const auto& d : all) {
        report(io, d.severity, path + ": " + d.to_string());
    }
    if (has_errors(all)) {
        return std::nullopt;
    }
    return g;
}

void write_marked(const std::filesystem::path& file, const Automaton& a, const SymbolTable& symbols, bool dot,
                  const std::string& name) {
    std::ofstream out(file);
    if (!out) {
        throw Error("cannot write '" + file.string() + "'");
    }
    if (dot) {
        write_dot(out, a, symbols, name);
    } else {
        write_automaton(out, a, symbols);
    }
}

std::string format_tuple(const CompiledRelation& rel, const StringTuple& tuple) {
    std::string out;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += tuple[i].empty() ? std::string("[]") : rel.format_word(tuple[i]);
    }
    return out;
}

StringTuple parse_input(const CompiledRelation& rel, const std::string& input, std::size_t first_tape,
                        std::size_t count) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = input.find(',', start);
        parts.push_back(input.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    if (parts.size() != count) {
        throw Error("expected " + std::to_string(count) + " comma-separated words, got " +
                    std::to_string(parts.size()));
    }
    StringTuple out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(parts[i] == "[]" ? Word{} : rel.parse_word(first_tape + i, parts[i]));
    }
    return out;
}

}  // namespace

bool color_from_environment() {
    if (const char* value = std::getenv("TLC_COLOR")) {
        const std::string v(value);
        if (v == "0") {
            return false;
        }
        if (v == "1") {
            return true;
        }
    }
    return isatty(STDERR_FILENO) != 0;
}

int cmd_compile(const std::string& grammar_path, const Config& config, Io& io) {
    try {
        const auto g = load_grammar(grammar_path, io);
        if (!g) {
            return 1;
        }
        const CompilationUnit unit(*g);
        const PhaseSnapshots phases = compile_phases(unit, config.variant);
        if (config.snapshot_dir) {
            const std::filesystem::path dir(*config.snapshot_dir);
            std::filesystem::create_directories(dir);
            const std::string ext = config.dot ? ".dot" : ".fsa";
            write_marked(dir / ("phase1" + ext), phases.initial.automaton, unit.symbols(), config.dot, "phase1");
            write_marked(dir / ("phase2" + ext), phases.after_cr.automaton, unit.symbols(), config.dot, "phase2");
            write_marked(dir / ("phase3" + ext), phases.after_sc.automaton, unit.symbols(), config.dot, "phase3");
        }
        const CompiledRelation rel = strip_markers(phases.after_sc, unit);
        std::ofstream file;
        std::ostream* out = &io.out;
        if (config.output) {
            file.open(*config.output);
            if (!file) {
                throw Error("cannot write '" + *config.output + "'");
            }
            out = &file;
        }
        if (config.dot) {
            write_dot(*out, rel.machine(), rel.symbols(), "relation");
        } else {
            write_relation(*out, rel);
        }
        return 0;
    } catch (const GrammarError& e) {
        report(io, Severity::error, grammar_path + ": " + e.diagnostic().to_string());
    } catch (const std::exception& e) {
        report_error(io, e.what());
    }
    return 1;
}

int cmd_lookup(const std::string& relation_path, const std::string& direction, const std::string& input,
               const Config& config, Io& io) {
    try {
        std::istringstream text(read_file(relation_path));
        const CompiledRelation rel = read_relation(text);
        const LookupOptions options{config.insertion_bound};
        LookupResult result;
        if (direction == "analyze") {
            result = analyze(rel, parse_input(rel, input, rel.lexical_tapes(), rel.surface_tapes()), options);
        } else if (direction == "generate") {
            result = generate(rel, parse_input(rel, input, 0, rel.lexical_tapes()), options);
        } else {
            throw Error("direction must be 'analyze' or 'generate'");
        }
        for (const auto& tuple : result.outputs) {
            io.out << format_tuple(rel, tuple) << '\n';
        }
        if (result.truncated) {
            io.out << "!truncated\n";
        }
        return 0;
    } catch (const std::exception& e) {
        report_error(io, e.what());
    }
    return 1;
}

int cmd_check(const std::string& grammar_path, const Config& config, Io& io, const CompileFn& compile) {
    try {
        const auto g = load_grammar(grammar_path, io);
        if (!g) {
            return 1;
        }
        const CheckResult result = check_equivalence(*g, CheckOptions{config.bound, config.variant, compile});
        if (result.equivalent()) {
            io.out << "equivalent up to bound " << config.bound << '\n';
            return 0;
        }
        io.out << "counterexample " << g->format_tuple(*result.counterexample) << ": relation "
               << (result.relation_accepts ? "accepts" : "rejects") << ", oracle "
               << (result.oracle_accepts ? "accepts" : "rejects") << '\n';
    } catch (const GrammarError& e) {
        report(io, Severity::error, grammar_path + ": " + e.diagnostic().to_string());
    } catch (const std::exception& e) {
        report_error(io, e.what());
    }
    return 1;
}

int cmd_dump(const std::string& path, const Config& config, Io& io) {
    try {
        const std::string text = read_file(path);
        std::istringstream lines(text);
        std::string line;
        bool is_relation = false;
        while (std::getline(lines, line)) {
            is_relation = is_relation || line.rfind("states ", 0) == 0;
        }
        if (!is_relation) {
            const auto g = load_grammar(path, io);
            if (!g) {
                return 1;
            }
            io.out << print_grammar(*g);
            return 0;
        }
        std::istringstream in(text);
        const CompiledRelation rel = read_relation(in);
        if (config.dot) {
            write_dot(io.out, rel.machine(), rel.symbols(), "relation");
        } else {
            write_relation(io.out, rel);
        }
        return 0;
    } catch (const GrammarError& e) {
        report(io, Severity::error, path + ": " + e.diagnostic().to_string());
    } catch (const std::exception& e) {
        report_error(io, e.what());
    }
    return 1;
}

int run(int argc, const char* const* argv, Io& io) {
    CLI::App app{"Two-level partition-rule compiler"};
    app.require_subcommand(1);

    Config config;
    std::string variant = "2";
    std::size_t insertion_bound = 0;

    std::string grammar_path;
    auto* compile = app.add_subcommand("compile", "Compile a grammar into a relation dump");
    compile->add_option("grammar", grammar_path, "Grammar file")->required();
    compile->add_option("-o,--output", config.output, "Output file (default: stdout)");
    compile->add_option("--variant", variant, "SC semantics: 2, 2i or 2ii")->check(CLI::IsMember({"2", "2i", "2ii"}));
    compile->add_option("--snapshots", config.snapshot_dir, "Write the three phase automata into this directory");
    compile->add_flag("--dot", config.dot, "Write Graphviz instead of the text dump");

    std::string relation_path;
    std::string direction;
    std::string input;
    auto* lookup = app.add_subcommand("lookup", "Analyze or generate with a compiled relation");
    lookup->add_option("relation", relation_path, "Relation dump")->required();
    lookup->add_option("direction", direction, "analyze or generate")
        ->required()
        ->check(CLI::IsMember({"analyze", "generate"}));
    lookup->add_option("input", input, "Input words, comma-separated per tape")->required();
    lookup->add_option("--bound", insertion_bound, "Insertion bound (default: 2 x input length + 4)")
        ->check(CLI::PositiveNumber);

    auto* check = app.add_subcommand("check", "Compare the compiled relation with the oracle");
    check->add_option("grammar", grammar_path, "Grammar file")->required();
    check->add_option("--variant", variant, "SC semantics: 2, 2i or 2ii")->check(CLI::IsMember({"2", "2i", "2ii"}));
    check->add_option("--bound", config.bound, "Per-tape length bound")->check(CLI::PositiveNumber);

    std::string dump_path;
    auto* dump = app.add_subcommand("dump", "Print a relation dump or a normalized grammar");
    dump->add_option("file", dump_path, "Relation dump or grammar file")->required();
    dump->add_flag("--dot", config.dot, "Write Graphviz for a relation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, io.out, io.err);
    }
    config.variant = parse_variant(variant);
    if (insertion_bound > 0) {
        config.insertion_bound = insertion_bound;
    }

    if (compile->parsed()) {
        return cmd_compile(grammar_path, config, io);
    }
    if (lookup->parsed()) {
        return cmd_lookup(relation_path, direction, input, config, io);
    }
    if (check->parsed()) {
        return cmd_check(grammar_path, config, io);
    }
    return cmd_dump(dump_path, config, io);
}

}  // namespace tlc::cli
