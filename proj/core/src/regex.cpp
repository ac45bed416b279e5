#include "tlc/regex.hpp"

#include "tlc/error.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>

namespace tlc {

struct Regex::Node {
    Kind kind = Kind::epsilon;
    SymbolId symbol = kEpsilon;
    std::vector<Regex> children;
    Alphabet symbols;
    Word target;
    std::vector<TapeTerm> tapes;
    TupleAlphabet pi;
};

std::shared_ptr<Regex::Node> Regex::make_node(Kind kind) {
    auto node = std::make_shared<Node>();
    node->kind = kind;
    return node;
}

Regex::Regex() : Regex(make_node(Kind::epsilon)) {}

Regex::Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Regex Regex::empty() { return Regex(make_node(Kind::empty)); }

Regex Regex::epsilon() { return Regex(make_node(Kind::epsilon)); }

Regex Regex::atom(SymbolId symbol) {
    auto node = make_node(Kind::atom);
    node->symbol = symbol;
    return Regex(std::move(node));
}

Regex Regex::any() { return Regex(make_node(Kind::any)); }

Regex Regex::word(std::span<const SymbolId> symbols) {
    std::vector<Regex> parts;
    for (SymbolId s : symbols) {
        parts.push_back(atom(s));
    }
    return concat(std::move(parts));
}

Regex Regex::concat(std::vector<Regex> parts) {
    std::vector<Regex> flat;
    for (auto& p : parts) {
        if (p.kind() == Kind::concat) {
            flat.insert(flat.end(), p.children().begin(), p.children().end());
        } else {
            flat.push_back(std::move(p));
        }
    }
    if (flat.empty()) {
        return epsilon();
    }
    if (flat.size() == 1) {
        return flat.front();
    }
    auto node = make_node(Kind::concat);
    node->children = std::move(flat);
    return Regex(std::move(node));
}

Regex Regex::alternation(std::vector<Regex> parts) {
    std::vector<Regex> flat;
    for (auto& p : parts) {
        if (p.kind() == Kind::alternation) {
            flat.insert(flat.end(), p.children().begin(), p.children().end());
        } else {
            flat.push_back(std::move(p));
        }
    }
    if (flat.empty()) {
        return empty();
    }
    if (flat.size() == 1) {
        return flat.front();
    }
    auto node = make_node(Kind::alternation);
    node->children = std::move(flat);
    return Regex(std::move(node));
}

Regex Regex::with_children(Kind kind, std::vector<Regex> children) {
    auto node = make_node(kind);
    node->children = std::move(children);
    return Regex(std::move(node));
}

Regex Regex::star(Regex inner) { return with_children(Kind::star, {std::move(inner)}); }
Regex Regex::plus(Regex inner) { return with_children(Kind::plus, {std::move(inner)}); }
Regex Regex::optional(Regex inner) { return with_children(Kind::optional, {std::move(inner)}); }
Regex Regex::intersection(Regex lhs, Regex rhs) {
    return with_children(Kind::intersection, {std::move(lhs), std::move(rhs)});
}
Regex Regex::difference(Regex lhs, Regex rhs) {
    return with_children(Kind::difference, {std::move(lhs), std::move(rhs)});
}
Regex Regex::complement(Regex inner) { return with_children(Kind::complement, {std::move(inner)}); }

Regex Regex::intro(Alphabet inserted, Regex inner) {
    auto node = make_node(Kind::intro);
    node->symbols = make_alphabet(std::move(inserted));
    node->children = {std::move(inner)};
    return Regex(std::move(node));
}

Regex Regex::sub(Regex replacement, Word target, Regex inner) {
    if (target.empty()) {
        throw Error("Sub requires a non-empty replaced word");
    }
    auto node = make_node(Kind::sub);
    node->target = std::move(target);
    node->children = {std::move(replacement), std::move(inner)};
    return Regex(std::move(node));
}

Regex Regex::tuple_product(std::vector<TapeTerm> tapes, TupleAlphabet pi) {
    if (tapes.size() != pi.arity()) {
        throw Error("tuple product arity mismatch: " + std::to_string(tapes.size()) + " tapes for tuple arity " +
                    std::to_string(pi.arity()));
    }
    auto node = make_node(Kind::tuple_product);
    node->tapes = std::move(tapes);
    node->pi = std::move(pi);
    return Regex(std::move(node));
}

Regex::Kind Regex::kind() const { return node_->kind; }
SymbolId Regex::symbol() const { return node_->symbol; }
const std::vector<Regex>& Regex::children() const { return node_->children; }
const Alphabet& Regex::symbols() const { return node_->symbols; }
const Word& Regex::target() const { return node_->target; }
const std::vector<Regex::TapeTerm>& Regex::tapes() const { return node_->tapes; }
const TupleAlphabet& Regex::tuple_alphabet() const { return node_->pi; }

Alphabet Regex::atoms() const {
    std::vector<SymbolId> out;
    std::vector<const Regex*> stack{this};
    while (!stack.empty()) {
        const Regex* r = stack.back();
        stack.pop_back();
        if (r->kind() == Kind::atom) {
            out.push_back(r->symbol());
        }
        if (r->kind() == Kind::sub) {
            out.insert(out.end(), r->target().begin(), r->target().end());
        }
        for (const auto& c : r->children()) {
            stack.push_back(&c);
        }
    }
    return make_alphabet(std::move(out));
}

namespace {

bool append_literal(const Regex& r, Word& out) {
    switch (r.kind()) {
        case Regex::Kind::epsilon:
            return true;
        case Regex::Kind::atom:
            out.push_back(r.symbol());
            return true;
        case Regex::Kind::concat:
            return std::all_of(r.children().begin(), r.children().end(),
                               [&](const Regex& c) { return append_literal(c, out); });
        default:
            return false;
    }
}

}  // namespace

bool Regex::as_literal(Word& out) const {
    out.clear();
    return append_literal(*this, out);
}

bool operator==(const Regex& a, const Regex& b) {
    if (a.node_ == b.node_) {
        return true;
    }
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    if (x.kind != y.kind || x.symbol != y.symbol || x.children != y.children || x.symbols != y.symbols ||
        x.target != y.target || x.tapes.size() != y.tapes.size()) {
        return false;
    }
    for (std::size_t i = 0; i < x.tapes.size(); ++i) {
        if (!(x.tapes[i].expr == y.tapes[i].expr) || x.tapes[i].alphabet != y.tapes[i].alphabet) {
            return false;
        }
    }
    return x.pi.symbols() == y.pi.symbols();
}

// ---- compilation -----------------------------------------------------------

Automaton from_regex(const Regex& expr, const Alphabet& alphabet, const SymbolTable* names) {
    using Kind = Regex::Kind;
    switch (expr.kind()) {
        case Kind::empty:
            return empty_language(alphabet);
        case Kind::epsilon:
            return epsilon_language(alphabet);
        case Kind::atom:
            if (!alphabet_contains(alphabet, expr.symbol())) {
                const std::string label = names != nullptr && expr.symbol() >= 0 &&
                                                  static_cast<std::size_t>(expr.symbol()) < names->size()
                                              ? "'" + names->name(expr.symbol()) + "'"
                                              : "#" + std::to_string(expr.symbol());
                throw AlphabetError("atom " + label + " is not in the declared alphabet");
            }
            return symbol_language(expr.symbol(), alphabet);
        case Kind::any:
            return any_symbol_language(alphabet);
        case Kind::concat: {
            Automaton out = epsilon_language(alphabet);
            for (const auto& c : expr.children()) {
                out = concat(out, from_regex(c, alphabet, names));
            }
            return out;
        }
        case Kind::alternation: {
            Automaton out = empty_language(alphabet);
            for (const auto& c : expr.children()) {
                out = unite(out, from_regex(c, alphabet, names));
            }
            return out;
        }
        case Kind::star:
            return star(from_regex(expr.children()[0], alphabet, names));
        case Kind::plus:
            return plus(from_regex(expr.children()[0], alphabet, names));
        case Kind::optional:
            return optional(from_regex(expr.children()[0], alphabet, names));
        case Kind::intersection:
            return intersect(from_regex(expr.children()[0], alphabet, names),
                             from_regex(expr.children()[1], alphabet, names));
        case Kind::difference:
            return difference(from_regex(expr.children()[0], alphabet, names),
                              from_regex(expr.children()[1], alphabet, names));
        case Kind::complement:
            return complement(from_regex(expr.children()[0], alphabet, names), alphabet);
        case Kind::intro:
            return intro(expr.symbols(), from_regex(expr.children()[0], alphabet, names));
        case Kind::sub: {
            const Alphabet wide = alphabet_union(alphabet, make_alphabet(expr.target()));
            return sub(from_regex(expr.children()[0], wide, names), expr.target(),
                       from_regex(expr.children()[1], wide, names));
        }
        case Kind::tuple_product: {
            std::vector<Automaton> tapes;
            for (const auto& term : expr.tapes()) {
                tapes.push_back(from_regex(term.expr, term.alphabet, names));
            }
            return tuple_product(tapes, expr.tuple_alphabet());
        }
    }
    throw Error("unknown regex node");
}

// ---- text form -------------------------------------------------------------

bool is_symbol_char(char c) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isspace(u) != 0 || std::iscntrl(u) != 0) {
        return false;
    }
    return std::strchr("|*+?()[].&~-,_:#", c) == nullptr;
}

bool split_symbols(std::string_view run, const SymbolTable& symbols, const Alphabet& alphabet, Word& out,
                   std::size_t* failed_at) {
    std::size_t pos = 0;
    while (pos < run.size()) {
        std::size_t best_len = 0;
        SymbolId best = kEpsilon;
        for (SymbolId s : alphabet) {
            const std::string& name = symbols.name(s);
            if (name.size() > best_len && run.substr(pos, name.size()) == name) {
                best_len = name.size();
                best = s;
            }
        }
        if (best_len == 0) {
            if (failed_at != nullptr) {
                *failed_at = pos;
            }
            return false;
        }
        out.push_back(best);
        pos += best_len;
    }
    return true;
}

namespace {

class RegexParser {
public:
    RegexParser(std::string_view text, const SymbolTable& symbols, const Alphabet& alphabet, RegexSyntax syntax)
        : text_(text), symbols_(symbols), alphabet_(alphabet), syntax_(syntax) {}

    Regex parse() {
        Regex r = alternation();
        skip_space();
        if (pos_ < text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw Error("regex '" + std::string(text_) + "': " + message);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
    }

    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool eat(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    Regex alternation() {
        std::vector<Regex> parts{boolean_term()};
        while (eat('|')) {
            parts.push_back(boolean_term());
        }
        return Regex::alternation(std::move(parts));
    }

    Regex boolean_term() {
        Regex lhs = concatenation();
        while (syntax_.boolean_operators) {
            if (eat('&')) {
                lhs = Regex::intersection(std::move(lhs), concatenation());
            } else if (eat('-')) {
                lhs = Regex::difference(std::move(lhs), concatenation());
            } else {
                break;
            }
        }
        return lhs;
    }

    bool at_concat_end() {
        skip_space();
        if (pos_ >= text_.size()) {
            return true;
        }
        const char c = text_[pos_];
        return c == ')' || c == '|' || (syntax_.boolean_operators && (c == '&' || c == '-'));
    }

    Regex concatenation() {
        std::vector<Regex> parts;
        while (!at_concat_end()) {
            unary(parts);
        }
        if (parts.empty()) {
            fail("empty expression; write [] for the empty string");
        }
        return Regex::concat(std::move(parts));
    }

    void unary(std::vector<Regex>& parts) {
        if (syntax_.boolean_operators && eat('~')) {
            std::vector<Regex> inner;
            unary(inner);
            Regex operand = Regex::concat(std::move(inner));
            parts.push_back(Regex::complement(std::move(operand)));
            return;
        }
        primary(parts);
        Regex last = std::move(parts.back());
        parts.pop_back();
        while (true) {
            if (eat('*')) {
                last = Regex::star(std::move(last));
            } else if (eat('+')) {
                last = Regex::plus(std::move(last));
            } else if (eat('?')) {
                last = Regex::optional(std::move(last));
            } else {
                break;
            }
        }
        parts.push_back(std::move(last));
    }

    // Pushes one or more items; postfix operators bind to the last one.
    void primary(std::vector<Regex>& parts) {
        skip_space();
        if (pos_ >= text_.size()) {
            fail("unexpected end of expression");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Regex inner = alternation();
            if (!eat(')')) {
                fail("missing ')'");
            }
            parts.push_back(std::move(inner));
            return;
        }
        if (c == '[') {
            ++pos_;
            if (!eat(']')) {
                fail("'[' must be followed by ']'");
            }
            parts.push_back(Regex::epsilon());
            return;
        }
        if (c == '.') {
            ++pos_;
            parts.push_back(Regex::any());
            return;
        }
        if (!is_symbol_char(c)) {
            fail("unexpected '" + std::string(1, c) + "'");
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_symbol_char(text_[pos_])) {
            ++pos_;
        }
        const std::string_view run = text_.substr(start, pos_ - start);
        Word word;
        std::size_t failed_at = 0;
        if (!split_symbols(run, symbols_, alphabet_, word, &failed_at)) {
            fail("unknown symbol at '" + std::string(run.substr(failed_at)) + "'");
        }
        for (SymbolId s : word) {
            parts.push_back(Regex::atom(s));
        }
    }

    std::string_view text_;
    const SymbolTable& symbols_;
    const Alphabet& alphabet_;
    RegexSyntax syntax_;
    std::size_t pos_ = 0;
};

int precedence(Regex::Kind kind) {
    switch (kind) {
        case Regex::Kind::alternation:
            return 0;
        case Regex::Kind::intersection:
        case Regex::Kind::difference:
            return 1;
        case Regex::Kind::concat:
            return 2;
        default:
            return 3;
    }
}

void print(const Regex& r, const SymbolTable& symbols, std::string& out, int context);

void print_child(const Regex& r, const SymbolTable& symbols, std::string& out, int context) {
    if (precedence(r.kind()) < context) {
        out += '(';
        print(r, symbols, out, 0);
        out += ')';
    } else {
        print(r, symbols, out, context);
    }
}

void print(const Regex& r, const SymbolTable& symbols, std::string& out, int context) {
    using Kind = Regex::Kind;
    switch (r.kind()) {
        case Kind::empty:
            out += "~(.*)";
            return;
        case Kind::epsilon:
            out += "[]";
            return;
        case Kind::atom:
            out += symbols.name(r.symbol());
            return;
        case Kind::any:
            out += '.';
            return;
        case Kind::concat:
            for (std::size_t i = 0; i < r.children().size(); ++i) {
                if (i > 0) {
                    out += ' ';
                }
                print_child(r.children()[i], symbols, out, 3);
            }
            return;
        case Kind::alternation:
            for (std::size_t i = 0; i < r.children().size(); ++i) {
                if (i > 0) {
                    out += " | ";
                }
                print_child(r.children()[i], symbols, out, 1);
            }
            return;
        case Kind::star:
        case Kind::plus:
        case Kind::optional:
            print_child(r.children()[0], symbols, out, 3);
            out += r.kind() == Kind::star ? '*' : r.kind() == Kind::plus ? '+' : '?';
            return;
        case Kind::intersection:
        case Kind::difference:
            print_child(r.children()[0], symbols, out, 1);
            out += r.kind() == Kind::intersection ? " & " : " - ";
            print_child(r.children()[1], symbols, out, 2);
            return;
        case Kind::complement:
            out += '~';
            print_child(r.children()[0], symbols, out, 3);
            return;
        case Kind::intro: {
            out += "Intro{";
            for (std::size_t i = 0; i < r.symbols().size(); ++i) {
                out += (i > 0 ? " " : "") + symbols.name(r.symbols()[i]);
            }
            out += "}(";
            print(r.children()[0], symbols, out, 0);
            out += ')';
            return;
        }
        case Kind::sub: {
            out += "Sub{";
            print(r.children()[0], symbols, out, 0);
            out += " /";
            for (SymbolId s : r.target()) {
                out += ' ' + symbols.name(s);
            }
            out += "}(";
            print(r.children()[1], symbols, out, 0);
            out += ')';
            return;
        }
        case Kind::tuple_product: {
            out += '<';
            for (std::size_t i = 0; i < r.tapes().size(); ++i) {
                if (i > 0) {
                    out += " x ";
                }
                print(r.tapes()[i].expr, symbols, out, 0);
            }
            out += '>';
            return;
        }
    }
    (void)context;
}

}  // namespace

Regex parse_regex(std::string_view text, const SymbolTable& symbols, const Alphabet& alphabet, RegexSyntax syntax) {
    RegexParser parser(text, symbols, alphabet, syntax);
    return parser.parse();
}

std::string to_string(const Regex& expr, const SymbolTable& symbols) {
    std::string out;
    print(expr, symbols, out, 0);
    return out;
}

}  // namespace tlc
