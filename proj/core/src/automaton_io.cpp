#include "tlc/automaton_io.hpp"

#include "tlc/error.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

namespace tlc {

void write_automaton(std::ostream& out, const Automaton& a, const SymbolTable& symbols) {
    out << "states " << a.num_states() << " initial " << a.initial() << " alphabet " << a.alphabet().size() << '\n';
    for (SymbolId s : a.alphabet()) {
        out << "sym " << s << ' ' << symbols.name(s) << '\n';
    }
    for (std::size_t q = 0; q < a.num_states(); ++q) {
        for (const auto& t : a.transitions(static_cast<StateId>(q))) {
            out << q << ' ' << t.symbol << ' ' << t.target << '\n';
        }
    }
    for (StateId f : a.final_states()) {
        out << "final " << f << '\n';
    }
}

namespace {

bool next_content_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos && line[first] != '#') {
            return true;
        }
    }
    return false;
}

[[noreturn]] void fail(int line_no, const std::string& message) {
    throw Error("automaton dump, line " + std::to_string(line_no) + ": " + message);
}

}  // namespace

Automaton read_automaton(std::istream& in, SymbolTable& symbols) {
    std::string line;
    int line_no = 0;
    if (!next_content_line(in, line, line_no)) {
        fail(line_no, "missing header");
    }
    std::istringstream header(line);
    std::string kw_states;
    std::string kw_initial;
    std::string kw_alphabet;
    long long n = -1;
    long long q0 = -1;
    long long k = -1;
    header >> kw_states >> n >> kw_initial >> q0 >> kw_alphabet >> k;
    if (!header || kw_states != "states" || kw_initial != "initial" || kw_alphabet != "alphabet" || n <= 0 || q0 < 0 ||
        q0 >= n || k < 0) {
        fail(line_no, "expected 'states <n> initial <q0> alphabet <k>'");
    }

    std::map<long long, SymbolId> remap;
    std::vector<SymbolId> alphabet;
    for (long long i = 0; i < k; ++i) {
        if (!next_content_line(in, line, line_no)) {
            fail(line_no, "missing sym line");
        }
        std::istringstream ls(line);
        std::string kw;
        long long id = 0;
        std::string name;
        ls >> kw >> id >> name;
        if (!ls || kw != "sym" || name.empty()) {
            fail(line_no, "expected 'sym <id> <name>'");
        }
        const SymbolId interned = symbols.intern(name);
        remap[id] = interned;
        alphabet.push_back(interned);
    }

    Automaton a(alphabet);
    for (long long i = 1; i < n; ++i) {
        a.add_state();
    }
    a.set_initial(static_cast<StateId>(q0));
    while (next_content_line(in, line, line_no)) {
        std::istringstream ls(line);
        std::string first;
        ls >> first;
        if (first == "final") {
            long long f = -1;
            ls >> f;
            if (!ls || f < 0 || f >= n) {
                fail(line_no, "bad final state");
            }
            a.set_final(static_cast<StateId>(f));
            continue;
        }
        long long src = -1;
        long long sym = 0;
        long long dst = -1;
        try {
            src = std::stoll(first);
        } catch (const std::exception&) {
            fail(line_no, "unexpected line '" + line + "'");
        }
        ls >> sym >> dst;
        if (!ls || src < 0 || src >= n || dst < 0 || dst >= n) {
            fail(line_no, "bad transition");
        }
        SymbolId symbol = kEpsilon;
        if (sym != -1) {
            const auto it = remap.find(sym);
            if (it == remap.end()) {
                fail(line_no, "transition uses undeclared symbol id " + std::to_string(sym));
            }
            symbol = it->second;
        }
        a.add_transition(static_cast<StateId>(src), symbol, static_cast<StateId>(dst));
    }
    a.normalize();
    if (a.has_deterministic_structure()) {
        a.mark_deterministic();
    }
    return a;
}

LoadedAutomaton read_automaton(std::istream& in) {
    SymbolTable symbols;
    Automaton a = read_automaton(in, symbols);
    return {std::move(symbols), std::move(a)};
}

void write_dot(std::ostream& out, const Automaton& a, const SymbolTable& symbols, std::string_view graph_name) {
    out << "digraph \"" << graph_name << "\" {\n  rankdir=LR;\n  node [shape=circle];\n";
    out << "  __start [shape=point];\n  __start -> q" << a.initial() << ";\n";
    for (StateId f : a.final_states()) {
        out << "  q" << f << " [shape=doublecircle];\n";
    }
    for (std::size_t q = 0; q < a.num_states(); ++q) {
        // group parallel edges into one label
        std::map<StateId, std::string> labels;
        for (const auto& t : a.transitions(static_cast<StateId>(q))) {
            auto& label = labels[t.target];
            if (!label.empty()) {
                label += ", ";
            }
            label += t.symbol == kEpsilon ? std::string("eps") : symbols.name(t.symbol);
        }
        for (const auto& [target, label] : labels) {
            out << "  q" << q << " -> q" << target << " [label=\"" << label << "\"];\n";
        }
    }
    out << "}\n";
}

}  // namespace tlc
