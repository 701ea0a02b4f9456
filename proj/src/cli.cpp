#include "pcdfa/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "pcdfa/automata.hpp"
#include "pcdfa/graph.hpp"
#include "pcdfa/io.hpp"
#include "pcdfa/reductions.hpp"
#include "pcdfa/solver.hpp"
#include "pcdfa/witnesses.hpp"

namespace pcdfa {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string kind;
    std::string graph_path;
    std::string out_path;
    std::string meta_path;
    std::string runs_path;
    std::string sample_path;
    std::string dfa_path;
    std::string in_path;
    std::string to;
    std::string coloring;
    std::optional<int> K;
    std::optional<std::size_t> L;
    std::optional<std::size_t> N;
    std::size_t max_m = 0;
    bool acyclic = false;
    bool minimize = false;
    bool deterministic = true;
    bool ratio = false;
    std::optional<double> budget;
    std::size_t n = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
};

Graph load_graph(const std::string& path) {
    if (path.empty()) throw UsageError("--graph is required");
    return parse_dimacs(read_file(path));
}

// Writes to `path`, or to `out` when path is empty or "-".
void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
    } else {
        write_file(path, text);
    }
}

ReductionParams resolve_params(const Graph& g, int K, const Options& o, std::ostream& err) {
    ReductionParams p = default_params(g, K);
    if (o.L) {
        p.L = *o.L;
        if (!o.N) p.N = static_cast<std::size_t>(K + 1) * p.L + 1;
    }
    if (o.N) p.N = *o.N;
    for (const auto& v : param_violations(g, p)) err << "warning: " << v << " (lemma bounds do not apply)\n";
    return p;
}

Coloring parse_coloring(const std::string& text, const Graph& g) {
    Coloring c;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            c.colors.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw UsageError("bad color value '" + item + "'");
        }
    }
    if (c.colors.size() != g.num_vertices()) {
        throw UsageError("--coloring has " + std::to_string(c.colors.size()) + " entries for " +
                         std::to_string(g.num_vertices()) + " vertices");
    }
    for (int col : c.colors) c.num_colors = std::max(c.num_colors, col);
    return c;
}

std::string coloring_text(const Coloring& c) {
    std::string s;
    for (std::size_t i = 0; i < c.colors.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c.colors[i]);
    }
    return s;
}

// Coloring to drive the forward constructions: the user's, else the
// oracle's. nullopt when the graph has no K-coloring.
std::optional<Coloring> pick_coloring(const Graph& g, int K, const Options& o) {
    if (!o.coloring.empty()) {
        Coloring c = parse_coloring(o.coloring, g);
        if (c.num_colors > K || !is_proper_coloring(g, c)) throw UsageError("--coloring is not a proper K-coloring");
        return c;
    }
    ChromaticOutcome chi = chromatic_number(g, K);
    if (!chi.within_bound) return std::nullopt;
    return chi.witness;
}

int require_k(const Options& o) {
    if (!o.K) throw UsageError("--K is required");
    if (*o.K < 1) throw UsageError("--K must be at least 1");
    return *o.K;
}

// -------------------------------------------------------------------- graph

int cmd_graph(const Options& o, std::ostream& out) {
    if (o.n == 0) throw UsageError("--n must be positive");
    std::mt19937_64 rng(o.seed);
    Graph g(1);
    if (o.kind == "complete") {
        g = complete_graph(o.n);
    } else if (o.kind == "cycle") {
        g = cycle_graph(o.n);
    } else if (o.kind == "path") {
        g = path_graph(o.n);
    } else if (o.kind == "edgeless") {
        g = Graph(o.n);
    } else {
        g = random_graph(o.n, o.p, rng);
    }
    emit(o.out_path, emit_dimacs(g), out);
    return kExitOk;
}

// ------------------------------------------------------------------- reduce

int cmd_reduce(const Options& o, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(o.graph_path);
    int K = o.K ? *o.K : chromatic_number(g).k_star;
    if (K < 1) throw UsageError("--K must be at least 1");
    ReductionMetadata meta{o.kind, g, {}, {}};
    DfaSample sample(Alphabet::binary());
    std::optional<MachineSample> runs;
    if (o.kind == "zhang") {
        meta.params = default_params(g, K);
        meta.encoding = make_encoding(g, meta.params);
        sample = zhang_sample(g);
    } else {
        meta.params = resolve_params(g, K, o, err);
        meta.encoding = make_encoding(g, meta.params);
        if (o.kind == "binary") {
            sample = binary_sample(g, meta.params, meta.encoding);
        } else {
            SingleString ss = single_string(g, meta.params, meta.encoding);
            sample = ss.sample;
            runs = ss.run;
        }
    }
    emit(o.out_path, write_abbadingo(sample), out);
    std::string meta_path = o.meta_path;
    if (meta_path.empty() && !o.out_path.empty() && o.out_path != "-") meta_path = o.out_path + ".meta.json";
    if (!meta_path.empty()) write_file(meta_path, to_json(meta).dump(2) + "\n");
    if (runs) {
        std::string runs_path = o.runs_path;
        if (runs_path.empty() && !o.out_path.empty() && o.out_path != "-") runs_path = o.out_path + ".runs";
        if (!runs_path.empty()) write_file(runs_path, write_runs(*runs));
        err << "run length " << runs->runs().front().input.size() << "\n";
    }
    err << o.kind << " sample: " << sample.size() << " strings (" << sample.positives().size()
        << " positive, " << sample.negatives().size() << " negative), K=" << meta.params.K
        << " L=" << meta.params.L << " N=" << meta.params.N << "\n";
    return kExitOk;
}

// -------------------------------------------------------------------- solve

int cmd_solve(const Options& o, std::ostream& out) {
    if (o.sample_path.empty()) throw UsageError("--sample is required");
    if (o.max_m == 0) throw UsageError("--max-m must be at least 1");
    DfaSample sample = read_abbadingo(read_file(o.sample_path));

    std::optional<PartialDfa> witness;
    int code = kExitOk;
    if (o.minimize) {
        MinResult r = min_consistent(sample, o.max_m, o.acyclic, o.budget);
        switch (r.status) {
            case MinStatus::found:
                out << "status: sat\nm*=" << r.m_star << "\n";
                witness = r.witness;
                break;
            case MinStatus::bound_exceeded:
                out << "status: unsat\nm* > " << o.max_m << "\n";
                code = kExitFail;
                break;
            case MinStatus::timeout:
                out << "status: timeout\n";
                code = kExitTimeout;
                break;
        }
        out << "explored: " << r.states_explored << "\n";
    } else {
        SolveOutcome r = exists_consistent({sample, o.max_m, o.acyclic, o.budget});
        out << "status: " << to_string(r.status) << "\nm=" << o.max_m << "\n";
        out << "explored: " << r.states_explored << "\n";
        if (r.status == SolveStatus::sat) witness = r.witness;
        if (r.status == SolveStatus::unsat) code = kExitFail;
        if (r.status == SolveStatus::timeout) code = kExitTimeout;
    }
    if (witness && !o.out_path.empty()) {
        nlohmann::json doc = o.acyclic ? to_json(*witness) : to_json(complete(*witness));
        write_file(o.out_path, doc.dump(2) + "\n");
    }
    return code;
}

// ------------------------------------------------------------------ witness

int cmd_witness(const Options& o, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(o.graph_path);
    int K = require_k(o);
    ReductionParams p = o.kind == "zhang" ? default_params(g, K) : resolve_params(g, K, o, err);
    Encoding enc = make_encoding(g, p);

    Automaton result = Dfa(Alphabet::binary(), 1);
    std::optional<std::size_t> bound;
    std::string bound_text;
    if (o.kind == "two-chain") {
        result = two_chain_dfa(g, p, enc);
        bound = 2 * (p.N + 2 * p.L) - 1;
        bound_text = "< 2(N+2L) = " + std::to_string(2 * (p.N + 2 * p.L));
    } else {
        auto c = pick_coloring(g, K, o);
        if (!c) {
            err << "graph has no " << K << "-coloring (chromatic number " << chromatic_number(g).k_star << ")\n";
            return kExitFail;
        }
        if (o.kind == "zhang") {
            c->num_colors = K;
            result = zhang_dfa_from_coloring(g, *c);
            bound = static_cast<std::size_t>(K) + 1;
            bound_text = "= K+1 = " + std::to_string(K + 1);
        } else if (o.kind == "binary") {
            result = binary_dfa_from_coloring(g, *c, p, enc);
            bound = static_cast<std::size_t>(K + 1) * p.L - 1;
            bound_text = "< (K+1)L = " + std::to_string(static_cast<std::size_t>(K + 1) * p.L);
        } else {
            result = single_dfa_from_coloring(g, *c, p, enc);
            bound = p.N + static_cast<std::size_t>(K + 1) * p.L;
            bound_text = "<= N+(K+1)L = " + std::to_string(*bound);
        }
        err << "coloring: " << coloring_text(*c) << "\n";
    }
    std::size_t states = std::visit([](const auto& m) { return m.num_states(); }, result);
    out << o.kind << " witness: " << states << " states (bound " << bound_text << ")\n";
    emit(o.out_path.empty() ? "" : o.out_path, to_json(result).dump(2) + "\n", o.out_path.empty() ? err : out);
    if (!o.meta_path.empty()) {
        ReductionMetadata meta{o.kind == "two-chain" ? "single" : o.kind, g, p, enc};
        write_file(o.meta_path, to_json(meta).dump(2) + "\n");
    }
    return kExitOk;
}

// ------------------------------------------------------------------ extract

int cmd_extract(const Options& o, std::ostream& out) {
    if (o.dfa_path.empty()) throw UsageError("--dfa is required");
    Dfa m = dfa_from_json(nlohmann::json::parse(read_file(o.dfa_path)));
    std::optional<ReductionMetadata> meta;
    if (!o.meta_path.empty()) meta = metadata_from_json(nlohmann::json::parse(read_file(o.meta_path)));
    std::string kind = !o.kind.empty() ? o.kind : meta ? meta->kind : "";
    if (kind.empty()) throw UsageError("--kind or --meta is required");

    Graph g = meta ? meta->graph : load_graph(o.graph_path);
    Coloring c;
    if (kind == "zhang") {
        c = coloring_from_zhang_dfa(m, g);
    } else {
        if (!meta) throw UsageError("--meta is required for binary and single extraction");
        if (kind == "binary") {
            BinaryExtraction ex = coloring_from_binary_dfa(m, g, meta->params, meta->encoding);
            c = ex.coloring;
            out << "k_hat=" << ex.chains.num_classes << " floor(m/L)=" << m.num_states() / meta->params.L << "\n";
        } else {
            c = coloring_from_single_dfa(m, g, meta->params, meta->encoding);
        }
    }
    out << "colors: " << coloring_text(c) << "\n";
    out << "num_colors=" << c.num_colors << " proper=" << (is_proper_coloring(g, c) ? "yes" : "no") << "\n";
    return kExitOk;
}

// ------------------------------------------------------------------- verify

class Checklist {
public:
    explicit Checklist(std::ostream& out) : out_(out) {}

    void check(bool ok, const std::string& what) {
        out_ << (ok ? "PASS " : "FAIL ") << what << "\n";
        failed_ = failed_ || !ok;
    }

    bool failed() const { return failed_; }

private:
    std::ostream& out_;
    bool failed_ = false;
};

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(o.graph_path);
    int K = require_k(o);
    Checklist cl(out);
    ChromaticOutcome chi = chromatic_number(g);
    out << "chromatic number: " << chi.k_star << "\n";
    std::optional<Coloring> c;
    if (chi.k_star <= K) c = chi.witness;

    if (o.kind == "zhang") {
        DfaSample z = zhang_sample(g);
        cl.check(is_prefix_complete(z) == PrefixCompleteness::complete, "sample is prefix-complete");
        if (c) {
            Coloring padded = *c;
            padded.num_colors = K;
            PartialDfa w = zhang_dfa_from_coloring(g, padded);
            cl.check(is_consistent(w, z), "forward: witness consistent");
            cl.check(w.num_states() == static_cast<std::size_t>(K) + 1,
                     "forward: witness has K+1 = " + std::to_string(K + 1) + " states");
        } else {
            cl.check(false, "forward: graph is " + std::to_string(K) + "-colorable");
        }
        SolveOutcome s = exists_consistent({z, static_cast<std::size_t>(K) + 1, false, o.budget});
        if (s.status == SolveStatus::sat) {
            Coloring back = coloring_from_zhang_dfa(s.total_witness(), g);
            cl.check(is_proper_coloring(g, back) && back.num_colors <= K,
                     "converse: solver DFA yields a proper coloring with " + std::to_string(back.num_colors) +
                         " <= K colors");
        } else {
            cl.check(false, std::string("converse: ") + to_string(s.status) + " at m=" + std::to_string(K + 1));
        }
        if (K > 1) {
            SolveOutcome below = exists_consistent({z, static_cast<std::size_t>(K), false, o.budget});
            bool smaller_colorable = chi.k_star <= K - 1;
            cl.check(below.status != SolveStatus::timeout &&
                         (below.status == SolveStatus::sat) == smaller_colorable,
                     "lemma at m=K: " + std::string(to_string(below.status)) + " iff (K-1)-colorable");
        }
        return cl.failed() ? kExitFail : kExitOk;
    }

    ReductionParams p = resolve_params(g, K, o, err);
    Encoding enc = make_encoding(g, p);
    const std::size_t binary_bound = static_cast<std::size_t>(K + 1) * p.L;

    if (o.kind == "binary") {
        DfaSample s = binary_sample(g, p, enc);
        cl.check(is_prefix_complete(s) == PrefixCompleteness::complete, "sample is prefix-complete");
        if (!c) {
            cl.check(false, "forward: graph is " + std::to_string(K) + "-colorable");
        } else {
            PartialDfa w = binary_dfa_from_coloring(g, *c, p, enc);
            cl.check(is_consistent(w, s), "forward: witness consistent");
            cl.check(is_acyclic(w), "forward: witness acyclic");
            cl.check(w.num_states() < binary_bound, "forward: " + std::to_string(w.num_states()) +
                                                        " states < (K+1)L = " + std::to_string(binary_bound));
            Dfa total = complete(w);
            cl.check(is_consistent(total, s) && total.num_states() == w.num_states(),
                     "completion keeps consistency and state count");
            BinaryExtraction ex = coloring_from_binary_dfa(total, g, p, enc);
            cl.check(is_proper_coloring(g, ex.coloring), "converse: extracted coloring is proper");
            cl.check(ex.chains.num_classes <= static_cast<std::size_t>(K),
                     "converse: k_hat = " + std::to_string(ex.chains.num_classes) + " <= K");
            cl.check(ex.chains.num_classes * p.L <= total.num_states(), "converse: k_hat * L <= states");
        }
        if (o.ratio) {
            Dfa h = rpni(s);
            RatioReport r = ratio_report(g, h, p, enc);
            out << "ratio: " << to_json(r).dump() << "\n";
            cl.check(r.k_star <= r.k_hat && r.k_hat <= r.m_hat / r.L, "ratio: k* <= k_hat <= floor(m_hat/L)");
        }
        return cl.failed() ? kExitFail : kExitOk;
    }

    if (o.kind == "single") {
        SingleString ss = single_string(g, p, enc);
        const std::size_t expected_len = 2 * g.num_edges() * (p.N + p.head_len + p.L + p.tail_len);
        cl.check(ss.str.size() == expected_len,
                 "|Str| = 2|E|(N+head+L+tail) = " + std::to_string(expected_len));
        cl.check(ss.sample.size() == ss.str.size() + 1, "sample is exactly Pref(Str)");
        bool zeros_ok = true;
        Word zeros;
        for (std::size_t j = 1; j <= p.N; ++j) {
            zeros.push_back(0);
            zeros_ok = zeros_ok && ss.sample.label_of(zeros) == std::optional<bool>(j < p.N);
        }
        cl.check(zeros_ok, "0^j positive for j in [1,N-1], 0^N negative");
        if (!c) {
            cl.check(false, "forward: graph is " + std::to_string(K) + "-colorable");
        } else {
            Dfa w = single_dfa_from_coloring(g, *c, p, enc);
            const std::size_t bound = p.N + binary_bound;
            cl.check(is_consistent(w, ss.sample), "forward: witness consistent");
            cl.check(w.num_states() <= bound, "forward: " + std::to_string(w.num_states()) +
                                                  " states <= N+(K+1)L = " + std::to_string(bound));
            Coloring back = coloring_from_single_dfa(w, g, p, enc);
            cl.check(is_proper_coloring(g, back) && back.num_colors <= K,
                     "converse: extracted coloring is proper with <= K colors");
        }
        Dfa two = two_chain_dfa(g, p, enc);
        const std::size_t two_bound = 2 * (p.N + 2 * p.L);
        cl.check(is_consistent(two, ss.sample), "two-chain DFA consistent");
        cl.check(two.num_states() < two_bound, "two-chain: " + std::to_string(two.num_states()) +
                                                   " states < 2(N+2L) = " + std::to_string(two_bound));
        return cl.failed() ? kExitFail : kExitOk;
    }
    throw UsageError("unknown kind '" + o.kind + "'");
}

// ------------------------------------------------------------ convert / dot

int cmd_convert(const Options& o, std::ostream& out) {
    if (o.in_path.empty()) throw UsageError("--in is required");
    std::string text = read_file(o.in_path);
    if (o.to == "moore" || o.to == "mealy") {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception&) {
            throw UsageError("--to " + o.to + " needs a DFA JSON input");
        }
        Automaton a = automaton_from_json(doc);
        if (std::holds_alternative<MooreMachine>(a) || std::holds_alternative<MealyMachine>(a)) {
            throw UsageError("input is already a machine; convert from a DFA");
        }
        Dfa d = dfa_from_json(doc);
        nlohmann::json res = o.to == "moore" ? to_json(dfa_to_moore(d)) : to_json(dfa_to_mealy(d));
        emit(o.out_path, res.dump(2) + "\n", out);
    } else if (o.to == "machine-sample") {
        emit(o.out_path, write_runs(dfa_sample_to_machine_sample(read_abbadingo(text))), out);
    } else {
        emit(o.out_path, write_abbadingo(machine_sample_to_dfa_sample(read_runs(text))), out);
    }
    return kExitOk;
}

int cmd_dot(const Options& o, std::ostream& out) {
    if (o.in_path.empty()) throw UsageError("--in is required");
    Automaton a = automaton_from_json(nlohmann::json::parse(read_file(o.in_path)));
    std::string text;
    if (auto* d = std::get_if<Dfa>(&a)) {
        text = to_dot(*d);
    } else if (auto* p = std::get_if<PartialDfa>(&a)) {
        text = to_dot(*p);
    } else {
        throw UsageError("dot accepts dfa and partial-dfa documents");
    }
    emit(o.out_path, text, out);
    return kExitOk;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hardness constructions for DFA identification from prefix-closed samples"};
    app.require_subcommand(1);
    Options o;

    auto* graph = app.add_subcommand("graph", "Generate a test graph in DIMACS format");
    graph->add_option("--kind", o.kind, "complete | cycle | path | edgeless | random")
        ->required()
        ->check(CLI::IsMember({"complete", "cycle", "path", "edgeless", "random"}));
    graph->add_option("--n", o.n, "Number of vertices")->required();
    graph->add_option("--p", o.p, "Edge probability for random graphs");
    graph->add_option("--seed", o.seed, "Random seed");
    graph->add_option("--out", o.out_path, "Output path (default stdout)");

    auto* reduce = app.add_subcommand("reduce", "Generate a reduction sample from a graph");
    reduce->add_option("kind", o.kind, "zhang | binary | single")
        ->required()
        ->check(CLI::IsMember({"zhang", "binary", "single"}));
    reduce->add_option("--graph", o.graph_path, "DIMACS graph")->required();
    reduce->add_option("--K", o.K, "Color budget (default: chromatic number)");
    reduce->add_option("--L", o.L, "Body length override");
    reduce->add_option("--N", o.N, "Separator length override");
    reduce->add_option("--out", o.out_path, "Abbadingo output (default stdout)");
    reduce->add_option("--meta", o.meta_path, "Metadata JSON (default <out>.meta.json)");
    reduce->add_option("--runs", o.runs_path, "Run file for single (default <out>.runs)");

    auto* solve = app.add_subcommand("solve", "Exact consistent-DFA search");
    solve->add_option("--sample", o.sample_path, "Abbadingo sample")->required();
    solve->add_option("--max-m", o.max_m, "State bound")->required();
    solve->add_flag("--acyclic", o.acyclic, "Restrict to acyclic DFAs");
    solve->add_flag("--minimize", o.minimize, "Find the smallest m <= max-m");
    solve->add_option("--budget", o.budget, "Wall-clock budget in seconds");
    solve->add_flag("--deterministic,!--no-deterministic", o.deterministic, "Sequential search (always on)");
    solve->add_option("--out", o.out_path, "Witness JSON");

    auto* witness = app.add_subcommand("witness", "Build the forward witness automaton");
    witness->add_option("--kind", o.kind, "zhang | binary | single | two-chain")
        ->required()
        ->check(CLI::IsMember({"zhang", "binary", "single", "two-chain"}));
    witness->add_option("--graph", o.graph_path, "DIMACS graph")->required();
    witness->add_option("--K", o.K, "Color budget")->required();
    witness->add_option("--coloring", o.coloring, "Comma-separated colors (default: exact oracle)");
    witness->add_option("--L", o.L, "Body length override");
    witness->add_option("--N", o.N, "Separator length override");
    witness->add_option("--out", o.out_path, "Witness JSON (default stderr)");
    witness->add_option("--meta", o.meta_path, "Also write reduction metadata");

    auto* extract = app.add_subcommand("extract", "Recover a coloring from a consistent DFA");
    extract->add_option("--kind", o.kind, "zhang | binary | single")
        ->check(CLI::IsMember({"zhang", "binary", "single"}));
    extract->add_option("--dfa", o.dfa_path, "DFA JSON")->required();
    extract->add_option("--meta", o.meta_path, "Metadata written by reduce");
    extract->add_option("--graph", o.graph_path, "DIMACS graph (zhang without metadata)");

    auto* verify = app.add_subcommand("verify", "Check both directions of a lemma for one graph");
    verify->add_option("--kind", o.kind, "zhang | binary | single")
        ->required()
        ->check(CLI::IsMember({"zhang", "binary", "single"}));
    verify->add_option("--graph", o.graph_path, "DIMACS graph")->required();
    verify->add_option("--K", o.K, "Color budget")->required();
    verify->add_option("--L", o.L, "Body length override");
    verify->add_option("--N", o.N, "Separator length override");
    verify->add_flag("--ratio", o.ratio, "Also run rpni and the ratio report (binary)");
    verify->add_option("--budget", o.budget, "Solver budget in seconds");

    auto* convert = app.add_subcommand("convert", "Convert between DFA, machine and sample formats");
    convert->add_option("--to", o.to, "moore | mealy | machine-sample | dfa-sample")
        ->required()
        ->check(CLI::IsMember({"moore", "mealy", "machine-sample", "dfa-sample"}));
    convert->add_option("--in", o.in_path, "Input file")->required();
    convert->add_option("--out", o.out_path, "Output file (default stdout)");

    auto* dot = app.add_subcommand("dot", "Render a DFA as Graphviz DOT");
    dot->add_option("--in", o.in_path, "DFA JSON")->required();
    dot->add_option("--out", o.out_path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (graph->parsed()) return cmd_graph(o, out);
        if (reduce->parsed()) return cmd_reduce(o, out, err);
        if (solve->parsed()) return cmd_solve(o, out);
        if (witness->parsed()) return cmd_witness(o, out, err);
        if (extract->parsed()) return cmd_extract(o, out);
        if (verify->parsed()) return cmd_verify(o, out, err);
        if (convert->parsed()) return cmd_convert(o, out);
        if (dot->parsed()) return cmd_dot(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.emplace_back("pcdfa");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace pcdfa
