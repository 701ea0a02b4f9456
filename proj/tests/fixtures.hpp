#pragma once

// Graphs, machines and independent oracles shared by the test binaries. The
// oracles work on plain strings and brute force so they share no code path
// with the library under test.

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pcdfa/automata.hpp"
#include "pcdfa/graph.hpp"
#include "pcdfa/reductions.hpp"

namespace fixtures {

using namespace pcdfa;

// Five vertices, six edges; colored red, green, blue, red, red.
inline Graph five_vertex_graph() {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    g.add_edge(2, 4);
    return g;
}

inline Coloring five_vertex_coloring() { return Coloring{{1, 2, 3, 1, 1}, 3}; }

inline Graph edgeless(std::size_t n) { return Graph(n); }

inline Graph from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Graph g(n);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
}

inline Dfa flip_flop() {
    Dfa d(Alphabet::binary(), 2);
    d.set_accepting(1);
    d.set_transition(0, 0, 1);
    d.set_transition(0, 1, 1);
    d.set_transition(1, 0, 0);
    d.set_transition(1, 1, 0);
    return d;
}

// The merged ADFA drawn for the five-vertex graph: a head routing the codes
// 000..100 to three color chains, L zero-steps per chain, and a tail trie per
// chain. Built by hand from the drawing, not by the library.
inline PartialDfa merged_adfa(std::size_t L) {
    PartialDfa a(Alphabet::binary(), 1);
    auto fresh = [&a](bool acc = false) { return a.add_state(acc); };
    const StateId start = 0;
    StateId u0 = fresh(), u00 = fresh(), u01 = fresh();
    a.set_transition(start, 0, u0);
    a.set_transition(start, 1, u0);
    a.set_transition(u0, 0, u00);
    a.set_transition(u0, 1, u01);

    // Chain heads: red, green, blue.
    StateId v[3] = {fresh(), fresh(), fresh()};
    a.set_transition(u00, 0, v[0]);
    a.set_transition(u00, 1, v[1]);
    a.set_transition(u01, 0, v[2]);
    a.set_transition(u01, 1, v[0]);
    StateId f[3];
    for (int c = 0; c < 3; ++c) {
        StateId cur = v[c];
        for (std::size_t h = 1; h <= L; ++h) {
            StateId nxt = fresh(h == L);
            a.set_transition(cur, 0, nxt);
            cur = nxt;
        }
        f[c] = cur;
    }
    auto both = [&a](StateId from, StateId to) {
        a.set_transition(from, 0, to);
        a.set_transition(from, 1, to);
    };
    // Red tail.
    StateId a1 = fresh(true), b1 = fresh();
    StateId f1_0 = fresh(), f1_00 = fresh(), f1_1 = fresh(), f1_10 = fresh();
    a.set_transition(f[0], 0, f1_0);
    a.set_transition(f[0], 1, f1_1);
    a.set_transition(f1_0, 0, f1_00);
    a.set_transition(f1_0, 1, f1_10);
    a.set_transition(f1_1, 0, f1_10);
    both(f1_00, a1);
    both(f1_10, b1);
    // Green tail.
    StateId a2 = fresh(true), b2 = fresh();
    StateId f2_0 = fresh(), f2_00 = fresh(), f2_01 = fresh();
    a.set_transition(f[1], 0, f2_0);
    a.set_transition(f2_0, 0, f2_00);
    a.set_transition(f2_0, 1, f2_01);
    a.set_transition(f2_00, 0, b2);
    both(f2_01, a2);
    // Blue tail.
    StateId a3 = fresh(true), b3 = fresh();
    StateId f3_0 = fresh(), f3_00 = fresh(), f3_1 = fresh(), f3_10 = fresh();
    a.set_transition(f[2], 0, f3_0);
    a.set_transition(f[2], 1, f3_1);
    both(f3_0, f3_00);
    both(f3_00, b3);
    a.set_transition(f3_1, 0, f3_10);
    both(f3_10, a3);
    return a;
}

inline std::vector<Graph> suite_graphs() {
    std::vector<Graph> gs{complete_graph(3), cycle_graph(5), complete_graph(4), five_vertex_graph(), edgeless(4),
                          path_graph(4)};
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 10; ++i) gs.push_back(random_graph(6, 0.5, rng));
    return gs;
}

// ---------------------------------------------------------------- oracles

// Exhaustive labelings with up to n colors.
inline int brute_chromatic(const Graph& g) {
    const std::size_t n = g.num_vertices();
    for (int k = 1; k <= static_cast<int>(n); ++k) {
        std::vector<int> col(n, 0);
        while (true) {
            bool ok = true;
            for (const Edge& e : g.edges()) ok = ok && col[e.u] != col[e.v];
            if (ok) return k;
            std::size_t i = 0;
            while (i < n && ++col[i] == k) col[i++] = 0;
            if (i == n) break;
        }
    }
    return n == 0 ? 0 : static_cast<int>(n);
}

inline std::string bits(std::size_t value, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t i = 0; i < width; ++i) s[width - 1 - i] = ((value >> i) & 1U) ? '1' : '0';
    return s;
}

inline std::size_t ceil_log2(std::size_t n) {
    std::size_t w = 0;
    while ((std::size_t{1} << w) < n) ++w;
    return std::max<std::size_t>(w, 1);
}

struct StringSample {
    std::set<std::string> pos, neg;
};

// The binary sample from its set definitions, as bit strings.
inline StringSample binary_oracle(const Graph& g, std::size_t L) {
    const std::size_t hl = ceil_log2(g.num_vertices()), tl = ceil_log2(g.num_edges());
    std::vector<std::string> s;
    StringSample out;
    for (Vertex v = 0; v < g.num_vertices(); ++v) out.pos.insert(bits(v, hl) + std::string(L, '0'));
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        for (std::size_t e = 0; e < g.num_edges(); ++e) {
            const Edge& ed = g.edges()[e];
            if (ed.u != v && ed.v != v) continue;
            std::string w = bits(v, hl) + std::string(L, '0') + bits(e, tl);
            s.push_back(w);
            if (ed.u == v) out.pos.insert(w);
        }
    }
    std::set<std::string> pref;
    for (const auto& w : s)
        for (std::size_t i = 0; i <= w.size(); ++i) pref.insert(w.substr(0, i));
    for (const auto& p : out.pos)
        for (std::size_t i = 0; i <= p.size(); ++i) pref.insert(p.substr(0, i));
    for (const auto& p : pref)
        if (!out.pos.count(p)) out.neg.insert(p);
    return out;
}

inline std::string word_str(const Word& w) {
    std::string s;
    for (Symbol a : w) s += static_cast<char>('0' + a);
    return s;
}

// Labels every prefix of Str by searching all factorizations into whole
// blocks followed by a remainder in 0^[1,N-1] or 0^N S+.
inline std::vector<bool> single_labels_oracle(const std::vector<std::string>& blocks_s, const std::set<std::string>& s_plus,
                                              std::size_t N) {
    std::string str;
    for (const auto& s : blocks_s) str += std::string(N, '0') + s;
    std::vector<std::size_t> starts{0};
    for (const auto& s : blocks_s) starts.push_back(starts.back() + N + s.size());
    std::vector<bool> labels;
    for (std::size_t len = 1; len <= str.size(); ++len) {
        bool positive = false;
        for (std::size_t k = 0; k < starts.size() && starts[k] <= len && !positive; ++k) {
            std::string r = str.substr(starts[k], len - starts[k]);
            bool all_zero = r.find('1') == std::string::npos;
            if (all_zero && !r.empty() && r.size() <= N - 1) positive = true;
            if (r.size() > N && r.compare(0, N, std::string(N, '0')) == 0 && s_plus.count(r.substr(N))) positive = true;
        }
        labels.push_back(positive);
    }
    return labels;
}

inline Word random_word(std::mt19937_64& rng, std::size_t k, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<Symbol> sym(0, static_cast<Symbol>(k - 1));
    Word w(len(rng));
    for (auto& a : w) a = sym(rng);
    return w;
}

}  // namespace fixtures
