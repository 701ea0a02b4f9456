#include "pcdfa/reductions.hpp"

#include <algorithm>

namespace pcdfa {

namespace {

Word to_bits(std::size_t value, std::size_t width) {
    Word w(width, 0);
    for (std::size_t i = 0; i < width; ++i) {
        w[width - 1 - i] = static_cast<Symbol>((value >> i) & 1U);
    }
    return w;
}

std::size_t ceil_log2(std::size_t n) {
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) ++bits;
    return bits;
}

}  // namespace

std::size_t code_width(std::size_t n) { return std::max<std::size_t>(1, ceil_log2(n)); }

ReductionParams default_params(const Graph& g, int K) {
    if (K < 1) throw DomainError("K must be at least 1");
    ReductionParams p;
    p.K = K;
    p.head_len = code_width(g.num_vertices());
    p.tail_len = code_width(g.num_edges());
    p.L = 4 * g.num_vertices() + 2 * g.num_edges() * p.tail_len + 1;
    p.N = static_cast<std::size_t>(K + 1) * p.L + 1;
    return p;
}

std::vector<std::string> param_violations(const Graph& g, const ReductionParams& p) {
    std::vector<std::string> out;
    if (p.K < 1) out.push_back("K must be at least 1");
    if (p.head_len < code_width(g.num_vertices())) {
        out.push_back("head_len " + std::to_string(p.head_len) + " cannot encode " +
                      std::to_string(g.num_vertices()) + " vertices");
    }
    if (p.tail_len < code_width(g.num_edges())) {
        out.push_back("tail_len " + std::to_string(p.tail_len) + " cannot encode " +
                      std::to_string(g.num_edges()) + " edges");
    }
    std::size_t l_floor = 4 * g.num_vertices() + 2 * g.num_edges() * p.tail_len;
    if (p.L <= l_floor) {
        out.push_back("L = " + std::to_string(p.L) + " is not greater than 4|V| + 2|E|*tail_len = " +
                      std::to_string(l_floor));
    }
    std::size_t n_floor = static_cast<std::size_t>(std::max(p.K, 0) + 1) * p.L;
    if (p.N <= n_floor) {
        out.push_back("N = " + std::to_string(p.N) + " is not greater than (K+1)L = " +
                      std::to_string(n_floor));
    }
    return out;
}

Encoding make_encoding(const Graph& g, const ReductionParams& p) {
    if (p.head_len == 0 || p.tail_len == 0) throw DomainError("code widths must be positive");
    if (p.head_len < 63 && (std::size_t{1} << p.head_len) < g.num_vertices()) {
        throw DomainError("head_len too small for the vertex count");
    }
    if (p.tail_len < 63 && (std::size_t{1} << p.tail_len) < g.num_edges()) {
        throw DomainError("tail_len too small for the edge count");
    }
    Encoding enc;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) enc.vertex_codes.push_back(to_bits(v, p.head_len));
    for (std::size_t e = 0; e < g.num_edges(); ++e) enc.edge_codes.push_back(to_bits(e, p.tail_len));
    return enc;
}

// -------------------------------------------------------------------- Zhang

Alphabet zhang_alphabet(const Graph& g) {
    std::vector<std::string> names;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) names.push_back("v" + std::to_string(v + 1));
    for (const Edge& e : g.edges()) {
        names.push_back("e" + std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1));
    }
    return Alphabet(std::move(names));
}

Symbol zhang_vertex_symbol(Vertex v) { return v; }

Symbol zhang_edge_symbol(const Graph& g, std::size_t edge_index) {
    return static_cast<Symbol>(g.num_vertices() + edge_index);
}

DfaSample zhang_sample(const Graph& g) {
    DfaSample s(zhang_alphabet(g));
    s.add({}, true);
    for (Vertex v = 0; v < g.num_vertices(); ++v) s.add({zhang_vertex_symbol(v)}, false);
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edges()[i];
        Symbol es = zhang_edge_symbol(g, i);
        s.add({zhang_vertex_symbol(e.u), es}, true);
        s.add({zhang_vertex_symbol(e.v), es}, false);
    }
    return s;
}

// ------------------------------------------------------------------- binary

Word body_end(const Encoding& enc, const ReductionParams& p, Vertex v) {
    Word w = enc.vertex_codes.at(v);
    w.insert(w.end(), p.L, 0);
    return w;
}

std::vector<ReductionString> reduction_strings(const Graph& g, const ReductionParams& p,
                                               const Encoding& enc) {
    std::vector<ReductionString> out;
    out.reserve(2 * g.num_edges());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        for (std::size_t i = 0; i < g.num_edges(); ++i) {
            const Edge& e = g.edges()[i];
            if (e.u != v && e.v != v) continue;
            ReductionString rs;
            rs.head = v;
            rs.edge = i;
            rs.word = body_end(enc, p, v);
            rs.word.insert(rs.word.end(), enc.edge_codes.at(i).begin(), enc.edge_codes.at(i).end());
            rs.positive = (e.u == v);
            out.push_back(std::move(rs));
        }
    }
    return out;
}

DfaSample binary_sample(const Graph& g, const ReductionParams& p, const Encoding& enc) {
    DfaSample s(Alphabet::binary());
    std::set<Word> positives;
    for (Vertex v = 0; v < g.num_vertices(); ++v) positives.insert(body_end(enc, p, v));
    auto strings = reduction_strings(g, p, enc);
    for (const auto& rs : strings) {
        if (rs.positive) positives.insert(rs.word);
    }
    // Negatives: every prefix of S (and of the body ends, which matters only for
    // isolated vertices) that is not positive.
    std::set<Word> all_prefixes;
    auto add_prefixes = [&](const Word& w) {
        for (std::size_t len = 0; len <= w.size(); ++len) {
            all_prefixes.emplace(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len));
        }
    };
    for (const auto& rs : strings) add_prefixes(rs.word);
    for (const auto& w : positives) add_prefixes(w);
    for (const auto& w : all_prefixes) s.add(w, positives.count(w) > 0);
    return s;
}

// ------------------------------------------------------------ single string

Outputs single_string_labels(const Graph& g, const ReductionParams& p, const Encoding& enc) {
    Outputs labels;
    for (const auto& rs : reduction_strings(g, p, enc)) {
        for (std::size_t j = 1; j <= p.N; ++j) labels.push_back(j < p.N);
        const std::size_t body_end_len = p.head_len + p.L;
        for (std::size_t t = 1; t <= rs.word.size(); ++t) {
            bool positive = (t == body_end_len) || (t == rs.word.size() && rs.positive);
            labels.push_back(positive);
        }
    }
    return labels;
}

SingleString single_string(const Graph& g, const ReductionParams& p, const Encoding& enc) {
    if (g.num_edges() == 0) throw DomainError("single-string reduction needs at least one edge");
    SingleString out{{}, DfaSample(Alphabet::binary()), MachineSample(Alphabet::binary()), 0, {}};
    out.blocks = reduction_strings(g, p, enc);
    out.block_length = p.N + p.head_len + p.L + p.tail_len;
    out.str.reserve(out.blocks.size() * out.block_length);
    for (const auto& rs : out.blocks) {
        out.str.insert(out.str.end(), p.N, 0);
        out.str.insert(out.str.end(), rs.word.begin(), rs.word.end());
    }
    Outputs labels = single_string_labels(g, p, enc);
    out.sample.add({}, false);
    Word prefix;
    prefix.reserve(out.str.size());
    for (std::size_t i = 0; i < out.str.size(); ++i) {
        prefix.push_back(out.str[i]);
        out.sample.add(prefix, labels[i]);
    }
    out.run.add({out.str, std::move(labels)});
    return out;
}

}  // namespace pcdfa
