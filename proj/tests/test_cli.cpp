#include "support/testing.hpp"

#include "tlc/commands.hpp"
#include "tlc/compiler.hpp"

#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using namespace tlc;

namespace {

struct Captured {
    std::ostringstream out;
    std::ostringstream err;
    cli::Io io{out, err, false};
};

class Scratch {
public:
    Scratch() {
        std::random_device rd;
        dir_ = fs::temp_directory_path() / ("tlc_cli_" + std::to_string(rd()));
        fs::create_directories(dir_);
    }
    ~Scratch() { fs::remove_all(dir_); }
    Scratch(const Scratch&) = delete;
    Scratch& operator=(const Scratch&) = delete;

    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(dir_ / name) << text;
        return (dir_ / name).string();
    }
    [[nodiscard]] fs::path path(const std::string& name) const { return dir_ / name; }

private:
    fs::path dir_;
};

int run(Captured& c, std::vector<std::string> args) {
    args.insert(args.begin(), "tlc");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    return cli::run(static_cast<int>(argv.size()), argv.data(), c.io);
}

std::string compiled_sample(const Scratch& scratch) {
    const std::string grammar = scratch.write("sample.tlc", testing::read_data("sample.tlc"));
    Captured c;
    REQUIRE(run(c, {"compile", grammar, "-o", scratch.path("sample.fsa").string()}) == 0);
    return scratch.path("sample.fsa").string();
}

}  // namespace

TEST_CASE("compile writes a relation dump") {
    Scratch scratch;
    const std::string grammar = scratch.write("sample.tlc", testing::read_data("sample.tlc"));
    Captured c;
    REQUIRE(run(c, {"compile", grammar}) == 0);
    CHECK(c.out.str().rfind("tapes lexical 1 surface 1\n", 0) == 0);
    CHECK(c.out.str().find("sym ") != std::string::npos);
    CHECK(c.err.str().empty());
}

TEST_CASE("compile writes phase snapshots") {
    Scratch scratch;
    const std::string grammar = scratch.write("sample.tlc", testing::read_data("sample.tlc"));
    Captured c;
    REQUIRE(run(c, {"compile", grammar, "--snapshots", scratch.path("snap").string()}) == 0);
    for (const char* name : {"phase1.fsa", "phase2.fsa", "phase3.fsa"}) {
        CHECK(fs::exists(scratch.path("snap") / name));
    }
    Captured d;
    REQUIRE(run(d, {"compile", grammar, "--dot", "--snapshots", scratch.path("dot").string()}) == 0);
    CHECK(fs::exists(scratch.path("dot") / "phase3.dot"));
    CHECK(d.out.str().rfind("digraph", 0) == 0);
}

TEST_CASE("compile reports grammar errors with line numbers") {
    Scratch scratch;
    Captured syntax;
    const std::string bad = scratch.write("bad.tlc", "tapes lexical 1 surface 1\nalphabet 1 : a\nalphabet 2 : a\nrule A => lex : _ q _\n");
    CHECK(run(syntax, {"compile", bad}) == 1);
    CHECK(syntax.err.str().find(bad + ": error (line 4)") != std::string::npos);

    Captured no_cr;
    const std::string only_sc =
        scratch.write("sc.tlc", "tapes lexical 1 surface 1\nalphabet 1 : a\nalphabet 2 : a\n"
                                "rule S <= lex : _ a _   surf : _ a _\n");
    CHECK(run(no_cr, {"compile", only_sc}) == 1);
    CHECK(no_cr.err.str().find("no context restriction") != std::string::npos);

    Captured empty;
    CHECK(run(empty, {"compile", scratch.write("empty.tlc", "")}) == 1);
    CHECK(empty.err.str().find("error") != std::string::npos);

    Captured missing;
    CHECK(run(missing, {"compile", scratch.path("nope.tlc").string()}) == 1);
    CHECK(missing.err.str().find("cannot read") != std::string::npos);
}

TEST_CASE("warnings do not stop compilation") {
    Scratch scratch;
    Captured c;
    const std::string grammar = scratch.write("k.tlc", testing::read_data("k_insertion.tlc"));
    CHECK(run(c, {"compile", grammar}) == 0);
    CHECK(c.err.str().find("warning") != std::string::npos);
}

TEST_CASE("coloured diagnostics") {
    Scratch scratch;
    Captured c;
    c.io.color = true;
    CHECK(run(c, {"compile", scratch.write("empty.tlc", "")}) == 1);
    CHECK(c.err.str().find("\033[31m") != std::string::npos);

    ::setenv("TLC_COLOR", "0", 1);
    CHECK_FALSE(cli::color_from_environment());
    ::setenv("TLC_COLOR", "1", 1);
    CHECK(cli::color_from_environment());
    ::unsetenv("TLC_COLOR");
}

TEST_CASE("lookup in both directions") {
    Scratch scratch;
    const std::string rel = compiled_sample(scratch);

    Captured gen;
    REQUIRE(run(gen, {"lookup", rel, "generate", "cd"}) == 0);
    CHECK(gen.out.str() == "cbd\n");

    Captured ana;
    REQUIRE(run(ana, {"lookup", rel, "analyze", "Vbbb"}) == 0);
    CHECK(ana.out.str() == "VBBB\n");

    Captured none;
    REQUIRE(run(none, {"lookup", rel, "analyze", "cd"}) == 0);
    CHECK(none.out.str().empty());

    Captured empty;
    REQUIRE(run(empty, {"lookup", rel, "generate", "[]"}) == 0);
    CHECK(empty.out.str() == "[]\n");

    Captured unknown;
    CHECK(run(unknown, {"lookup", rel, "analyze", "xyz"}) == 1);
    CHECK(unknown.err.str().find("unknown symbol 'xyz'") != std::string::npos);

    Captured arity;
    CHECK(run(arity, {"lookup", rel, "analyze", "b,b"}) == 1);

    Captured direction;
    CHECK(run(direction, {"lookup", rel, "sideways", "b"}) != 0);
}

TEST_CASE("lookup reports truncation") {
    Scratch scratch;
    const std::string grammar = scratch.write(
        "e.tlc", "tapes lexical 1 surface 1\nalphabet 1 : a\nalphabet 2 : a e\n"
                 "rule A => lex : _ a _   surf : _ a _\nrule E => lex : _ [] _   surf : _ e _\n");
    Captured c;
    REQUIRE(run(c, {"compile", grammar, "-o", scratch.path("e.fsa").string()}) == 0);
    Captured look;
    REQUIRE(run(look, {"lookup", scratch.path("e.fsa").string(), "generate", "[]", "--bound", "2"}) == 0);
    CHECK(look.out.str() == "[]\ne\nee\n!truncated\n");
}

TEST_CASE("lookup with several tapes") {
    Scratch scratch;
    const std::string grammar = scratch.write("two.tlc", testing::read_data("two_lexical.tlc"));
    Captured c;
    REQUIRE(run(c, {"compile", grammar, "-o", scratch.path("two.fsa").string()}) == 0);
    Captured ana;
    REQUIRE(run(ana, {"lookup", scratch.path("two.fsa").string(), "analyze", "kasi"}) == 0);
    CHECK(ana.out.str() == "ks,a\n");
    Captured gen;
    REQUIRE(run(gen, {"lookup", scratch.path("two.fsa").string(), "generate", "ks,a"}) == 0);
    CHECK(gen.out.str() == "aksi\nkasi\nksia\n");  // the vowel is free to move
}

TEST_CASE("check against the oracle") {
    Scratch scratch;
    const std::string grammar = scratch.write("sample.tlc", testing::read_data("sample.tlc"));
    Captured c;
    CHECK(run(c, {"check", grammar, "--bound", "3"}) == 0);
    CHECK(c.out.str() == "equivalent up to bound 3\n");

    const std::string guv = scratch.write("guv.tlc", testing::read_data("guv.tlc"));
    Captured v;
    CHECK(run(v, {"check", guv, "--variant", "2ii", "--bound", "3"}) == 0);
}

TEST_CASE("check catches a compiler that skips coercion") {
    Scratch scratch;
    const std::string grammar = scratch.write("sample.tlc", testing::read_data("sample.tlc"));
    const CompileFn no_sc = [](const Grammar& g, Variant variant) {
        const CompilationUnit unit(g);
        const auto phases = compile_phases(unit, variant);
        return strip_markers(MarkedLanguage{phases.after_cr.automaton, Phase::after_sc}, unit);
    };
    Captured c;
    cli::Config config;
    config.bound = 3;
    CHECK(cli::cmd_check(grammar, config, c.io, no_sc) == 1);
    CHECK(c.out.str().rfind("counterexample ", 0) == 0);
    CHECK(c.out.str().find("relation accepts, oracle rejects") != std::string::npos);
}

TEST_CASE("dump") {
    Scratch scratch;
    const std::string rel = compiled_sample(scratch);
    std::ifstream in(rel);
    std::ostringstream original;
    original << in.rdbuf();

    Captured c;
    REQUIRE(run(c, {"dump", rel}) == 0);
    CHECK(c.out.str() == original.str());

    Captured dot;
    REQUIRE(run(dot, {"dump", rel, "--dot"}) == 0);
    CHECK(dot.out.str().rfind("digraph", 0) == 0);

    Captured grammar;
    REQUIRE(run(grammar, {"dump", scratch.write("g.tlc", testing::read_data("sample.tlc"))}) == 0);
    CHECK(grammar.out.str().find("rule R3 <=  lex : c _ [] _ d") != std::string::npos);
}

TEST_CASE("command line errors") {
    Captured none;
    CHECK(run(none, {}) != 0);
    Captured variant;
    CHECK(run(variant, {"check", "x.tlc", "--variant", "3"}) != 0);
    Captured help;
    CHECK(run(help, {"--help"}) == 0);
    CHECK(help.out.str().find("compile") != std::string::npos);
}
