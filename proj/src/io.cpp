#include "pcdfa/io.hpp"

#include <array>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace pcdfa {

using nlohmann::json;

namespace {

json transitions_json(const TransitionTable& t) {
    json out = json::array();
    for (StateId q = 0; q < t.num_states(); ++q) {
        for (Symbol a = 0; a < t.alphabet().size(); ++a) {
            StateId to = t.at(q, a);
            if (to != kNoState) out.push_back({q, a, to});
        }
    }
    return out;
}

json header(const char* type, const TransitionTable& t) {
    return json{{"type", type},
                {"states", t.num_states()},
                {"alphabet", t.alphabet().names()},
                {"initial", t.initial()},
                {"transitions", transitions_json(t)}};
}

template <typename Machine>
json accepting_json(const Machine& m) {
    return m.accepting_states();
}

struct Header {
    std::string type;
    Alphabet alphabet{1};
    std::size_t states = 0;
    StateId initial = 0;
    std::vector<std::array<std::uint64_t, 3>> transitions;
};

Header read_header(const json& doc) {
    try {
        Header h;
        h.type = doc.at("type").get<std::string>();
        h.alphabet = Alphabet(doc.at("alphabet").get<std::vector<std::string>>());
        h.states = doc.at("states").get<std::size_t>();
        h.initial = doc.at("initial").get<StateId>();
        for (const auto& t : doc.at("transitions")) {
            if (!t.is_array() || t.size() != 3) throw DomainError("transition must be [from, symbol, to]");
            h.transitions.push_back({t[0].get<std::uint64_t>(), t[1].get<std::uint64_t>(), t[2].get<std::uint64_t>()});
        }
        return h;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed automaton JSON: ") + e.what());
    }
}

template <typename Machine>
void apply_transitions(Machine& m, const Header& h, std::set<std::pair<std::uint64_t, std::uint64_t>>* seen) {
    for (const auto& [from, sym, to] : h.transitions) {
        if (from >= h.states || to >= h.states || sym >= h.alphabet.size()) {
            throw DomainError("transition [" + std::to_string(from) + ", " + std::to_string(sym) + ", " +
                              std::to_string(to) + "] out of range");
        }
        if (seen && !seen->emplace(from, sym).second) {
            throw DomainError("duplicate transition for state " + std::to_string(from) + " symbol " +
                              std::to_string(sym));
        }
        m.set_transition(static_cast<StateId>(from), static_cast<Symbol>(sym), static_cast<StateId>(to));
    }
}

bool sign(const json& j) {
    auto s = j.get<std::string>();
    if (s == "+") return true;
    if (s == "-") return false;
    throw DomainError("output entries must be \"+\" or \"-\"");
}

std::string escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string dot_common(const TransitionTable& t, const std::vector<bool>& accepting) {
    std::ostringstream out;
    out << "digraph dfa {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    out << "  __start [shape=point];\n";
    out << "  __start -> " << t.initial() << ";\n";
    for (StateId q = 0; q < t.num_states(); ++q) {
        out << "  " << q << " [shape=" << (accepting[q] ? "doublecircle" : "circle") << "];\n";
    }
    for (StateId q = 0; q < t.num_states(); ++q) {
        std::map<StateId, std::string> labels;
        for (Symbol a = 0; a < t.alphabet().size(); ++a) {
            StateId to = t.at(q, a);
            if (to == kNoState) continue;
            auto& label = labels[to];
            if (!label.empty()) label += ",";
            label += escape(t.alphabet().name(a));
        }
        for (const auto& [to, label] : labels) {
            out << "  " << q << " -> " << to << " [label=\"" << label << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace

json to_json(const Dfa& dfa) {
    json j = header("dfa", dfa.table());
    j["accepting"] = accepting_json(dfa);
    return j;
}

json to_json(const PartialDfa& dfa) {
    json j = header("partial-dfa", dfa.table());
    j["accepting"] = accepting_json(dfa);
    return j;
}

json to_json(const MooreMachine& m) {
    json j = header("moore", m.table());
    json out = json::array();
    for (StateId q = 0; q < m.num_states(); ++q) out.push_back(m.output(q) ? "+" : "-");
    j["output"] = out;
    return j;
}

json to_json(const MealyMachine& m) {
    json j = header("mealy", m.table());
    json out = json::array();
    for (StateId q = 0; q < m.num_states(); ++q) {
        for (Symbol a = 0; a < m.alphabet().size(); ++a) out.push_back(m.output(q, a) ? "+" : "-");
    }
    j["output"] = out;
    return j;
}

json to_json(const Automaton& a) {
    return std::visit([](const auto& m) { return to_json(m); }, a);
}

Automaton automaton_from_json(const json& doc) {
    Header h = read_header(doc);
    if (h.states == 0) throw DomainError("automaton needs at least one state");
    if (h.initial >= h.states) throw DomainError("initial state out of range");
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;

    auto read_accepting = [&](auto& m) {
        for (const auto& q : doc.at("accepting")) {
            auto s = q.get<std::uint64_t>();
            if (s >= h.states) throw DomainError("accepting state out of range");
            m.set_accepting(static_cast<StateId>(s));
        }
    };

    try {
        if (h.type == "dfa") {
            Dfa m(h.alphabet, h.states, h.initial);
            apply_transitions(m, h, &seen);
            if (seen.size() != h.states * h.alphabet.size()) {
                throw DomainError("dfa document is missing transitions; use type partial-dfa");
            }
            read_accepting(m);
            return m;
        }
        if (h.type == "partial-dfa") {
            PartialDfa m(h.alphabet, h.states, h.initial);
            apply_transitions(m, h, &seen);
            read_accepting(m);
            return m;
        }
        if (h.type == "moore" || h.type == "mealy") {
            const bool moore = h.type == "moore";
            const auto& out = doc.at("output");
            std::size_t expected = moore ? h.states : h.states * h.alphabet.size();
            if (out.size() != expected) {
                throw DomainError("output has " + std::to_string(out.size()) + " entries, expected " +
                                  std::to_string(expected));
            }
            if (moore) {
                MooreMachine m(h.alphabet, h.states, h.initial);
                apply_transitions(m, h, &seen);
                for (StateId q = 0; q < h.states; ++q) m.set_output(q, sign(out[q]));
                return m;
            }
            MealyMachine m(h.alphabet, h.states, h.initial);
            apply_transitions(m, h, &seen);
            const std::size_t k = h.alphabet.size();
            for (StateId q = 0; q < h.states; ++q) {
                for (Symbol a = 0; a < k; ++a) m.set_output(q, a, sign(out[q * k + a]));
            }
            return m;
        }
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed automaton JSON: ") + e.what());
    }
    throw DomainError("unknown automaton type '" + h.type + "'");
}

Dfa dfa_from_json(const json& doc) {
    Automaton a = automaton_from_json(doc);
    if (auto* d = std::get_if<Dfa>(&a)) return *d;
    if (auto* p = std::get_if<PartialDfa>(&a)) return complete(*p);
    throw DomainError("expected a dfa or partial-dfa document");
}

// ---------------------------------------------------------------- Abbadingo

std::string write_abbadingo(const DfaSample& sample) {
    std::ostringstream out;
    out << sample.size() << ' ' << sample.alphabet().size() << '\n';
    for (const auto& ls : sample.entries()) {
        out << (ls.label ? 1 : 0) << ' ' << ls.symbols.size();
        for (Symbol a : ls.symbols) out << ' ' << a;
        out << '\n';
    }
    return out.str();
}

DfaSample read_abbadingo(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) throw ParseError(1, "empty Abbadingo file");
    std::istringstream hs(line);
    long long count = 0;
    long long k = 0;
    if (!(hs >> count >> k) || count < 0 || k <= 0) {
        throw ParseError(lineno, "header must be '<num_strings> <alphabet_size>'");
    }
    DfaSample sample{Alphabet(static_cast<std::size_t>(k))};
    for (long long i = 0; i < count; ++i) {
        if (!next_line()) throw ParseError(lineno, "expected " + std::to_string(count) + " strings");
        std::istringstream ls(line);
        long long label = 0;
        long long len = 0;
        if (!(ls >> label >> len) || (label != 0 && label != 1) || len < 0) {
            throw ParseError(lineno, "string line must be '<0|1> <length> <symbols...>'");
        }
        Word w;
        for (long long j = 0; j < len; ++j) {
            long long a = 0;
            if (!(ls >> a)) throw ParseError(lineno, "fewer symbols than the declared length");
            if (a < 0 || a >= k) throw ParseError(lineno, "symbol " + std::to_string(a) + " out of range");
            w.push_back(static_cast<Symbol>(a));
        }
        std::string extra;
        if (ls >> extra) throw ParseError(lineno, "more symbols than the declared length");
        try {
            sample.add(std::move(w), label == 1);
        } catch (const DomainError& e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (next_line()) throw ParseError(lineno, "trailing content after the declared strings");
    return sample;
}

// --------------------------------------------------------------------- runs

std::string write_runs(const MachineSample& ms) {
    const bool compact = ms.alphabet().size() <= 10;
    std::string out;
    for (const auto& run : ms.runs()) {
        if (compact) {
            out += word_to_digits(run.input);
        } else {
            for (std::size_t i = 0; i < run.input.size(); ++i) {
                if (i) out += ' ';
                out += std::to_string(run.input[i]);
            }
        }
        out += '\n';
        out += outputs_to_string(run.output);
        out += '\n';
    }
    return out;
}

MachineSample read_runs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    if (lines.size() % 2 != 0) throw ParseError(lines.size(), "runs come in pairs of lines");
    std::vector<MachineRun> runs;
    Symbol max_symbol = 1;
    for (std::size_t i = 0; i < lines.size(); i += 2) {
        MachineRun run;
        try {
            if (lines[i].find(' ') != std::string::npos) {
                std::istringstream ls(lines[i]);
                long long a = 0;
                while (ls >> a) {
                    if (a < 0) throw DomainError("negative symbol");
                    run.input.push_back(static_cast<Symbol>(a));
                }
            } else {
                run.input = digits_to_word(lines[i]);
            }
            run.output = outputs_from_string(lines[i + 1]);
        } catch (const DomainError& e) {
            throw ParseError(i + 1, e.what());
        }
        for (Symbol a : run.input) max_symbol = std::max(max_symbol, a);
        runs.push_back(std::move(run));
    }
    MachineSample ms{Alphabet(static_cast<std::size_t>(max_symbol) + 1)};
    for (std::size_t i = 0; i < runs.size(); ++i) {
        try {
            ms.add(std::move(runs[i]));
        } catch (const DomainError& e) {
            throw ParseError(2 * i + 1, e.what());
        }
    }
    return ms;
}

// ---------------------------------------------------------------------- DOT

std::string to_dot(const Dfa& dfa) {
    std::vector<bool> acc(dfa.num_states());
    for (StateId q = 0; q < dfa.num_states(); ++q) acc[q] = dfa.is_accepting(q);
    return dot_common(dfa.table(), acc);
}

std::string to_dot(const PartialDfa& dfa) {
    std::vector<bool> acc(dfa.num_states());
    for (StateId q = 0; q < dfa.num_states(); ++q) acc[q] = dfa.is_accepting(q);
    return dot_common(dfa.table(), acc);
}

// ----------------------------------------------------------------- metadata

json to_json(const ReductionMetadata& meta) {
    auto codes = [](const std::vector<Word>& ws) {
        json out = json::array();
        for (const auto& w : ws) out.push_back(word_to_digits(w));
        return out;
    };
    json edges = json::array();
    for (const Edge& e : meta.graph.edges()) edges.push_back({e.u + 1, e.v + 1});
    return json{{"kind", meta.kind},
                {"K", meta.params.K},
                {"L", meta.params.L},
                {"N", meta.params.N},
                {"head_len", meta.params.head_len},
                {"tail_len", meta.params.tail_len},
                {"vertex_codes", codes(meta.encoding.vertex_codes)},
                {"edge_codes", codes(meta.encoding.edge_codes)},
                {"graph_hash", graph_hash(meta.graph)},
                {"graph", {{"vertices", meta.graph.num_vertices()}, {"edges", edges}}}};
}

ReductionMetadata metadata_from_json(const json& doc) {
    try {
        const auto& gj = doc.at("graph");
        Graph g(gj.at("vertices").get<std::size_t>());
        for (const auto& e : gj.at("edges")) {
            auto u = e.at(0).get<long long>();
            auto v = e.at(1).get<long long>();
            if (u < 1 || v < 1) throw DomainError("graph edges are 1-based");
            g.add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        }
        if (doc.contains("graph_hash") && doc.at("graph_hash").get<std::string>() != graph_hash(g)) {
            throw DomainError("graph_hash does not match the embedded graph");
        }
        ReductionMetadata meta{doc.at("kind").get<std::string>(), g, {}, {}};
        meta.params.K = doc.at("K").get<int>();
        meta.params.L = doc.at("L").get<std::size_t>();
        meta.params.N = doc.at("N").get<std::size_t>();
        meta.params.head_len = doc.at("head_len").get<std::size_t>();
        meta.params.tail_len = doc.at("tail_len").get<std::size_t>();
        for (const auto& c : doc.at("vertex_codes")) meta.encoding.vertex_codes.push_back(digits_to_word(c.get<std::string>()));
        for (const auto& c : doc.at("edge_codes")) meta.encoding.edge_codes.push_back(digits_to_word(c.get<std::string>()));
        if (meta.encoding.vertex_codes.size() != g.num_vertices() ||
            meta.encoding.edge_codes.size() != g.num_edges()) {
            throw DomainError("metadata codes do not match the graph size");
        }
        return meta;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed metadata JSON: ") + e.what());
    }
}

json to_json(const RatioReport& r) {
    return json{{"m_hat", r.m_hat}, {"k_hat", r.k_hat}, {"L", r.L}, {"k_star", r.k_star}, {"m_star_lower", r.m_star_lower}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << contents;
    if (!out) throw std::runtime_error("error writing '" + path + "'");
}

}  // namespace pcdfa
