#include "tlc/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tlc {

bool is_reserved_name(std::string_view name) {
    return name == kZeroName || name == kBoundaryName || name == kPlaceholderName;
}

namespace {

enum class RuleOp { restriction, coercion, composite };

std::string_view strip(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<std::string> words_of(std::string_view s) {
    std::istringstream in{std::string(s)};
    std::vector<std::string> out;
    std::string w;
    while (in >> w) {
        out.push_back(w);
    }
    return out;
}

/// The three parts of one side of a rule, each split into per-tape fields.
struct SideText {
    std::vector<std::string_view> left;
    std::vector<std::string_view> centre;
    std::vector<std::string_view> right;
};

class GrammarParser {
public:
    GrammarParser(std::string_view text, std::vector<Diagnostic>* warnings) : text_(text), warnings_(warnings) {}

    Grammar parse() {
        std::size_t start = 0;
        while (start <= text_.size()) {
            auto end = text_.find('\n', start);
            if (end == std::string_view::npos) {
                end = text_.size();
            }
            ++line_;
            std::string_view line = text_.substr(start, end - start);
            if (const auto hash = line.find('#'); hash != std::string_view::npos) {
                line = line.substr(0, hash);
            }
            line = strip(line);
            if (!line.empty()) {
                statement(line);
            }
            start = end + 1;
        }
        if (!have_tapes_) {
            error("grammar declares no tapes (expected 'tapes lexical <N> surface <M>')");
        }
        if (g_.cr_rules.empty() && g_.sc_rules.empty()) {
            error("grammar contains no rules");
        }
        return std::move(g_);
    }

private:
    [[noreturn]] void error(const std::string& message) const {
        throw GrammarError(Diagnostic{Severity::error, line_, message});
    }

    void warn(const std::string& message) const {
        if (warnings_ != nullptr) {
            warnings_->push_back(Diagnostic{Severity::warning, line_, message});
        }
    }

    void statement(std::string_view line) {
        const auto words = words_of(line);
        const std::string& keyword = words.front();
        if (keyword == "tapes") {
            tapes(words);
        } else if (keyword == "alphabet") {
            alphabet(line);
        } else if (keyword == "rule") {
            rule(line);
        } else {
            error("unknown statement '" + keyword + "'");
        }
    }

    void tapes(const std::vector<std::string>& words) {
        if (have_tapes_) {
            error("tapes declared twice");
        }
        if (words.size() != 5 || words[1] != "lexical" || words[3] != "surface") {
            error("expected 'tapes lexical <N> surface <M>'");
        }
        std::size_t lexical = 0;
        std::size_t surface = 0;
        try {
            lexical = std::stoul(words[2]);
            surface = std::stoul(words[4]);
        } catch (const std::exception&) {
            error("tape counts must be non-negative integers");
        }
        if (lexical == 0 || surface == 0) {
            error("need at least one lexical and one surface tape");
        }
        g_.tapes.lexical = lexical;
        g_.tapes.surface = surface;
        g_.tapes.alphabets.assign(lexical + surface, Alphabet{});
        declared_.assign(lexical + surface, false);
        have_tapes_ = true;
    }

    void alphabet(std::string_view line) {
        if (!have_tapes_) {
            error("alphabet declared before tapes");
        }
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            error("expected 'alphabet <tape> : <symbols>'");
        }
        const auto head = words_of(line.substr(0, colon));
        if (head.size() != 2) {
            error("expected 'alphabet <tape> : <symbols>'");
        }
        std::size_t tape = 0;
        try {
            tape = std::stoul(head[1]);
        } catch (const std::exception&) {
            error("alphabet tape must be a number");
        }
        if (tape < 1 || tape > g_.tapes.tapes()) {
            error("alphabet for tape " + head[1] + ", but the grammar has " + std::to_string(g_.tapes.tapes()) +
                  " tapes");
        }
        if (declared_[tape - 1]) {
            error("alphabet " + head[1] + " declared twice");
        }
        std::vector<SymbolId> ids;
        for (const auto& name : words_of(line.substr(colon + 1))) {
            if (is_reserved_name(name)) {
                error("reserved symbol '" + name + "' cannot be declared in an alphabet");
            }
            if (!std::all_of(name.begin(), name.end(), is_symbol_char)) {
                error("invalid symbol name '" + name + "'");
            }
            ids.push_back(g_.symbols.intern(name));
        }
        if (ids.empty()) {
            error("alphabet " + head[1] + " is empty");
        }
        g_.tapes.alphabets[tape - 1] = make_alphabet(std::move(ids));
        declared_[tape - 1] = true;
    }

    void rule(std::string_view line) {
        if (!have_tapes_) {
            error("rule before tapes declaration");
        }
        for (std::size_t t = 0; t < declared_.size(); ++t) {
            if (!declared_[t]) {
                error("rule before the alphabet of tape " + std::to_string(t + 1) + " is declared");
            }
        }
        std::istringstream in{std::string(line)};
        std::string kw;
        std::string name;
        std::string op_text;
        in >> kw >> name >> op_text;
        if (name.empty() || op_text.empty()) {
            error("expected 'rule <name> <op> lex : ... surf : ...'");
        }
        RuleOp op{};
        if (op_text == "=>") {
            op = RuleOp::restriction;
        } else if (op_text == "<=") {
            op = RuleOp::coercion;
        } else if (op_text == "<=>") {
            op = RuleOp::composite;
        } else {
            error("unknown rule operator '" + op_text + "' (expected =>, <= or <=>)");
        }
        const auto op_pos = line.find(op_text, line.find(name, 4) + name.size());
        const std::string_view body = line.substr(op_pos + op_text.size());

        SideText lex;
        SideText surf;
        sections(body, lex, surf);

        const std::size_t n = g_.tapes.tapes();
        std::vector<Field> left(n);
        std::vector<Field> right(n);
        for (std::size_t i = 0; i < g_.tapes.lexical; ++i) {
            left[i] = field(lex.left[i], i);
            right[i] = field(lex.right[i], i);
        }
        for (std::size_t j = 0; j < g_.tapes.surface; ++j) {
            const std::size_t t = g_.tapes.lexical + j;
            left[t] = field(surf.left[j], t);
            right[t] = field(surf.right[j], t);
        }

        if (op == RuleOp::restriction || op == RuleOp::composite) {
            StringTuple centre(n);
            for (std::size_t i = 0; i < g_.tapes.lexical; ++i) {
                centre[i] = literal(lex.centre[i], i);
            }
            for (std::size_t j = 0; j < g_.tapes.surface; ++j) {
                centre[g_.tapes.lexical + j] = literal(surf.centre[j], g_.tapes.lexical + j);
            }
            const bool empty_centre =
                std::all_of(centre.begin(), centre.end(), [](const Word& w) { return w.empty(); });
            const bool free_contexts =
                std::none_of(left.begin(), left.end(), [](const Field& f) { return f.has_value(); }) &&
                std::none_of(right.begin(), right.end(), [](const Field& f) { return f.has_value(); });
            if (empty_centre && free_contexts) {
                warn("rule " + name + " licenses an empty partition in every context");
            }
            g_.cr_rules.push_back(CRRule{name, line_, left, {centre}, right});

            if (op == RuleOp::composite) {
                SCRule sc{name, line_, left, {}, {}, right};
                for (std::size_t i = 0; i < g_.tapes.lexical; ++i) {
                    sc.lexical_centre.emplace_back(Regex::word(centre[i]));
                }
                for (std::size_t j = 0; j < g_.tapes.surface; ++j) {
                    sc.surface_centre.emplace_back(Regex::word(centre[g_.tapes.lexical + j]));
                }
                g_.sc_rules.push_back(std::move(sc));
            }
        } else {
            SCRule sc{name, line_, left, {}, {}, right};
            for (std::size_t i = 0; i < g_.tapes.lexical; ++i) {
                sc.lexical_centre.push_back(field(lex.centre[i], i));
            }
            for (std::size_t j = 0; j < g_.tapes.surface; ++j) {
                sc.surface_centre.push_back(field(surf.centre[j], g_.tapes.lexical + j));
            }
            g_.sc_rules.push_back(std::move(sc));
        }
    }

    /// Finds the `lex :` and `surf :` sections of a rule body.
    void sections(std::string_view body, SideText& lex, SideText& surf) {
        struct Marker {
            std::size_t keyword;
            std::size_t content;
            bool lexical;
        };
        std::vector<Marker> markers;
        for (std::size_t i = 0; i < body.size(); ++i) {
            if (i > 0 && std::isspace(static_cast<unsigned char>(body[i - 1])) == 0) {
                continue;
            }
            for (const std::string_view kw : {std::string_view("lex"), std::string_view("surf")}) {
                if (body.substr(i, kw.size()) != kw) {
                    continue;
                }
                std::size_t j = i + kw.size();
                while (j < body.size() && std::isspace(static_cast<unsigned char>(body[j])) != 0) {
                    ++j;
                }
                if (j < body.size() && body[j] == ':') {
                    markers.push_back({i, j + 1, kw == "lex"});
                }
            }
        }
        if (!strip(body.substr(0, markers.empty() ? body.size() : markers.front().keyword)).empty()) {
            error("unexpected text before 'lex :' / 'surf :'");
        }
        bool seen_lex = false;
        bool seen_surf = false;
        for (std::size_t m = 0; m < markers.size(); ++m) {
            const std::size_t end = m + 1 < markers.size() ? markers[m + 1].keyword : body.size();
            const std::string_view content = body.substr(markers[m].content, end - markers[m].content);
            bool& seen = markers[m].lexical ? seen_lex : seen_surf;
            if (seen) {
                error(std::string("duplicate '") + (markers[m].lexical ? "lex" : "surf") + " :' section");
            }
            seen = true;
            side(content, markers[m].lexical ? g_.tapes.lexical : g_.tapes.surface,
                 markers[m].lexical ? lex : surf, markers[m].lexical ? "lex" : "surf");
        }
        if (!seen_lex) {
            lex = omitted_side(g_.tapes.lexical);
        }
        if (!seen_surf) {
            surf = omitted_side(g_.tapes.surface);
        }
    }

    static SideText omitted_side(std::size_t tapes) {
        SideText s;
        s.left.assign(tapes, {});
        s.centre.assign(tapes, {});
        s.right.assign(tapes, {});
        return s;
    }

    void side(std::string_view content, std::size_t tapes, SideText& out, const char* label) {
        const auto parts = split(content, '_');
        if (parts.size() != 3) {
            error(std::string(label) + " side needs 'left _ centre _ right' (found " +
                  std::to_string(parts.size() - 1) + " '_' separators)");
        }
        out.left = fields(parts[0], tapes, label);
        out.centre = fields(parts[1], tapes, label);
        out.right = fields(parts[2], tapes, label);
    }

    std::vector<std::string_view> fields(std::string_view part, std::size_t tapes, const char* label) {
        if (strip(part).empty()) {
            return std::vector<std::string_view>(tapes);
        }
        auto out = split(part, ',');
        if (out.size() != tapes) {
            error(std::string(label) + " side has " + std::to_string(out.size()) + " fields where " +
                  std::to_string(tapes) + " tapes are declared");
        }
        for (auto& f : out) {
            f = strip(f);
        }
        return out;
    }

    void check_reserved(std::string_view text, std::size_t tape) {
        std::size_t i = 0;
        while (i < text.size()) {
            if (!is_symbol_char(text[i])) {
                ++i;
                continue;
            }
            const std::size_t start = i;
            while (i < text.size() && is_symbol_char(text[i])) {
                ++i;
            }
            const std::string_view run = text.substr(start, i - start);
            Word ignored;
            std::size_t failed_at = 0;
            if (!split_symbols(run, g_.symbols, g_.tapes.alphabets[tape], ignored, &failed_at)) {
                const std::string_view rest = run.substr(failed_at);
                for (const std::string_view reserved : {kZeroName, kBoundaryName, kPlaceholderName}) {
                    if (rest.substr(0, reserved.size()) == reserved) {
                        error("reserved symbol '" + std::string(reserved) + "' used on tape " +
                              std::to_string(tape + 1));
                    }
                }
                error("unknown symbol '" + std::string(rest) + "' on tape " + std::to_string(tape + 1));
            }
        }
    }

    Field field(std::string_view text, std::size_t tape) {
        text = strip(text);
        if (text.empty()) {
            return std::nullopt;
        }
        check_reserved(text, tape);
        try {
            return parse_regex(text, g_.symbols, g_.tapes.alphabets[tape]);
        } catch (const GrammarError&) {
            throw;
        } catch (const Error& e) {
            error(std::string(e.what()) + " on tape " + std::to_string(tape + 1));
        }
    }

    Word literal(std::string_view text, std::size_t tape) {
        const Field f = field(text, tape);
        Word w;
        if (f && !f->as_literal(w)) {
            error("centre '" + std::string(strip(text)) + "' on tape " + std::to_string(tape + 1) +
                  " must be a literal string in a => or <=> rule");
        }
        return w;
    }

    std::string_view text_;
    std::vector<Diagnostic>* warnings_;
    Grammar g_;
    std::vector<bool> declared_;
    bool have_tapes_ = false;
    int line_ = 0;
};

}  // namespace

Grammar parse_grammar(std::string_view text, std::vector<Diagnostic>* warnings) {
    GrammarParser parser(text, warnings);
    return parser.parse();
}

Word parse_word(const Grammar& g, std::size_t tape, std::string_view text) {
    if (tape >= g.tapes.tapes()) {
        throw Error("tape " + std::to_string(tape + 1) + " does not exist");
    }
    Word out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i])) != 0) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])) == 0) {
            ++i;
        }
        const std::string_view run = text.substr(start, i - start);
        std::size_t failed_at = 0;
        if (!split_symbols(run, g.symbols, g.tapes.alphabets[tape], out, &failed_at)) {
            throw Error("unknown symbol '" + std::string(run.substr(failed_at)) + "' for tape " +
                        std::to_string(tape + 1));
        }
    }
    return out;
}

}  // namespace tlc
