#include "pcdfa/witnesses.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace pcdfa {

namespace {

void require_proper(const Graph& g, const Coloring& c) {
    if (!is_proper_coloring(g, c)) throw DomainError("coloring is not a proper coloring of the graph");
}

// Follows `bits` from `from`, creating fresh rejecting states for missing
// transitions. Returns the state reached.
StateId extend_path(PartialDfa& a, StateId from, std::span<const Symbol> bits) {
    StateId q = from;
    for (Symbol b : bits) {
        auto next = a.next(q, b);
        if (!next) {
            StateId fresh = a.add_state(false);
            a.set_transition(q, b, fresh);
            next = fresh;
        }
        q = *next;
    }
    return q;
}

// Chain analysis from `root` over the given vertices. Verifies the chain
// distinctness facts instead of assuming them.
ChainAnalysis analyze_chains(const Dfa& m, StateId root, const ReductionParams& p,
                             const Encoding& enc, const std::vector<Vertex>& vertices,
                             std::vector<std::size_t>& class_of_vertex) {
    ChainAnalysis out;
    out.end_state_of_vertex.assign(enc.vertex_codes.size(), kNoState);
    std::map<StateId, std::size_t> class_of_end;
    std::unordered_map<StateId, std::pair<std::size_t, std::size_t>> seen;  // state -> (class, h)

    for (Vertex v : vertices) {
        std::vector<StateId> chain;
        chain.reserve(p.L + 1);
        StateId q = m.run_from(root, enc.vertex_codes[v]);
        chain.push_back(q);
        for (std::size_t h = 0; h < p.L; ++h) {
            q = m.next(q, 0);
            chain.push_back(q);
        }
        out.end_state_of_vertex[v] = q;
        auto [it, fresh] = class_of_end.emplace(q, class_of_end.size());
        std::size_t cls = it->second;
        class_of_vertex[v] = cls;
        if (fresh) out.chain_states.push_back(chain);
        for (std::size_t h = 0; h <= p.L; ++h) {
            auto [pos, inserted] = seen.emplace(chain[h], std::pair{cls, h});
            if (!inserted && pos->second != std::pair{cls, h}) {
                throw std::logic_error("0-chains overlap: state " + std::to_string(chain[h]) +
                                       " appears at two chain positions");
            }
        }
    }
    out.num_classes = class_of_end.size();
    if (out.num_classes * p.L > m.num_states()) {
        throw std::logic_error("disjoint 0-chains exceed the state count");
    }
    return out;
}

}  // namespace

// -------------------------------------------------------------------- Zhang

PartialDfa zhang_dfa_from_coloring(const Graph& g, const Coloring& c) {
    require_proper(g, c);
    const auto K = static_cast<std::size_t>(c.num_colors);
    PartialDfa a(zhang_alphabet(g), K + 1, 0);
    a.set_accepting(0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        a.set_transition(0, zhang_vertex_symbol(v), static_cast<StateId>(c.colors[v]));
    }
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edges()[i];
        Symbol es = zhang_edge_symbol(g, i);
        a.set_transition(static_cast<StateId>(c.colors[e.u]), es, 0);
        auto low = static_cast<StateId>(c.colors[e.v]);
        a.set_transition(low, es, low);
    }
    return a;
}

Coloring coloring_from_zhang_dfa(const Dfa& m, const Graph& g) {
    if (!is_consistent(m, zhang_sample(g))) {
        throw DomainError("DFA is not consistent with the Zhang sample of the graph");
    }
    Coloring raw;
    raw.colors.reserve(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        raw.colors.push_back(static_cast<int>(m.next(m.initial(), zhang_vertex_symbol(v))) + 1);
    }
    raw.num_colors = static_cast<int>(m.num_states());
    Coloring out = normalize_coloring(raw);
    if (!is_proper_coloring(g, out)) throw std::logic_error("extracted Zhang coloring is improper");
    return out;
}

// ------------------------------------------------------------------- binary

PartialDfa binary_dfa_from_coloring(const Graph& g, const Coloring& c, const ReductionParams& p,
                                    const Encoding& enc) {
    require_proper(g, c);
    if (c.num_colors > p.K) {
        throw DomainError("coloring uses a palette of " + std::to_string(c.num_colors) +
                          " colors, more than K = " + std::to_string(p.K));
    }
    PartialDfa a(Alphabet::binary(), 1, 0);

    // Head trie without its last level; the last head bit enters the chain.
    std::vector<StateId> head_parent(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        std::span<const Symbol> code = enc.vertex_codes[v];
        head_parent[v] = extend_path(a, a.initial(), code.first(code.size() - 1));
    }

    // One 0-chain per color in use, ascending.
    std::map<int, std::vector<StateId>> chain;
    for (int col : c.colors) chain.emplace(col, std::vector<StateId>{});
    for (auto& [col, states] : chain) {
        for (std::size_t h = 0; h <= p.L; ++h) {
            states.push_back(a.add_state(h == p.L));
            if (h > 0) a.set_transition(states[h - 1], 0, states[h]);
        }
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        Symbol last = enc.vertex_codes[v].back();
        StateId target = chain.at(c.colors[v]).front();
        auto existing = a.next(head_parent[v], last);
        if (existing && *existing != target) {
            throw std::logic_error("head codes collide for vertices of different colors");
        }
        a.set_transition(head_parent[v], last, target);
    }

    // Tails: from the end of the chain of each endpoint's color. Both endpoints
    // of an edge sharing a chain would need both labels on one leaf.
    std::set<std::pair<StateId, std::size_t>> tails;
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        const Edge& e = g.edges()[i];
        for (Vertex x : {e.u, e.v}) {
            StateId end = chain.at(c.colors[x]).back();
            if (!tails.emplace(end, i).second) throw std::logic_error("tail path conflict");
            StateId leaf = extend_path(a, end, enc.edge_codes[i]);
            a.set_accepting(leaf, x == e.u);
        }
    }
    return a;
}

BinaryExtraction coloring_from_binary_dfa(const Dfa& m, const Graph& g, const ReductionParams& p,
                                          const Encoding& enc) {
    if (!is_consistent(m, binary_sample(g, p, enc))) {
        throw DomainError("DFA is not consistent with the binary reduction sample");
    }
    std::vector<Vertex> all(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) all[v] = v;
    std::vector<std::size_t> cls(g.num_vertices(), 0);
    BinaryExtraction out;
    out.chains = analyze_chains(m, m.initial(), p, enc, all, cls);
    out.coloring.num_colors = static_cast<int>(out.chains.num_classes);
    for (Vertex v = 0; v < g.num_vertices(); ++v) out.coloring.colors.push_back(static_cast<int>(cls[v]) + 1);
    if (!is_proper_coloring(g, out.coloring)) {
        throw std::logic_error("extracted coloring is improper despite consistency");
    }
    return out;
}

// ----------------------------------------------------------- single string

Dfa single_dfa_from_coloring(const Graph& g, const Coloring& c, const ReductionParams& p,
                             const Encoding& enc) {
    if (p.N <= static_cast<std::size_t>(p.K + 1) * p.L) {
        throw DomainError("N = " + std::to_string(p.N) + " must exceed (K+1)L = " +
                          std::to_string(static_cast<std::size_t>(p.K + 1) * p.L));
    }
    PartialDfa a = binary_dfa_from_coloring(g, c, p, enc);
    const StateId old_initial = a.initial();

    // Leaves: states reached by elements of S.
    std::vector<StateId> leaves;
    for (const auto& rs : reduction_strings(g, p, enc)) {
        auto q = a.run(rs.word);
        if (!q) throw std::logic_error("binary witness misses an element of S");
        leaves.push_back(*q);
    }

    std::vector<StateId> lead;
    for (std::size_t j = 0; j < p.N; ++j) lead.push_back(a.add_state(j > 0));
    for (std::size_t j = 0; j + 1 < p.N; ++j) a.set_transition(lead[j], 0, lead[j + 1]);
    a.set_transition(lead.back(), 0, old_initial);
    a.set_initial(lead.front());

    StateId after_one_zero = p.N > 1 ? lead[1] : old_initial;
    for (StateId leaf : leaves) a.set_transition(leaf, 0, after_one_zero);
    return complete(a);
}

Coloring coloring_from_single_dfa(const Dfa& m, const Graph& g, const ReductionParams& p,
                                  const Encoding& enc) {
    const std::size_t bound = p.N + static_cast<std::size_t>(p.K + 1) * p.L;
    if (m.num_states() > bound) {
        throw DomainError("DFA has " + std::to_string(m.num_states()) + " states, more than N+(K+1)L = " +
                          std::to_string(bound));
    }
    SingleString ss = single_string(g, p, enc);
    if (!is_consistent(m, ss.sample)) {
        throw DomainError("DFA is not consistent with the single-string sample");
    }

    // The state after each block's leading 0^N must be the same.
    std::optional<StateId> ret;
    StateId q = m.initial();
    std::size_t pos = 0;
    for (std::size_t b = 0; b < ss.blocks.size(); ++b) {
        q = m.run_from(q, std::span<const Symbol>(ss.str).subspan(pos, p.N));
        pos += p.N;
        if (!ret) {
            ret = q;
        } else if (*ret != q) {
            throw DomainError("return-state property fails: block " + std::to_string(b) +
                              " starts in state " + std::to_string(q) + ", block 0 in state " +
                              std::to_string(*ret));
        }
        q = m.run_from(q, std::span<const Symbol>(ss.str).subspan(pos, ss.block_length - p.N));
        pos += ss.block_length - p.N;
    }

    std::vector<Vertex> active;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) > 0) active.push_back(v);
    }
    std::vector<std::size_t> cls(g.num_vertices(), 0);
    ChainAnalysis chains = analyze_chains(m, *ret, p, enc, active, cls);

    // Isolated vertices never occur in the string; they join the first class.
    Coloring out;
    out.num_colors = static_cast<int>(chains.num_classes);
    for (Vertex v = 0; v < g.num_vertices(); ++v) out.colors.push_back(static_cast<int>(cls[v]) + 1);
    out = normalize_coloring(out);
    if (!is_proper_coloring(g, out)) throw std::logic_error("extracted coloring is improper");
    if (out.num_colors > p.K) {
        throw DomainError("extraction found " + std::to_string(out.num_colors) +
                          " color classes, more than K = " + std::to_string(p.K));
    }
    return out;
}

Dfa two_chain_dfa(const Graph& g, const ReductionParams& p, const Encoding& enc) {
    SingleString ss = single_string(g, p, enc);
    const std::size_t chain_len = p.N + p.head_len + p.L;

    PartialDfa a(Alphabet::binary(), 1, 0);
    // chains[1] is C+, chains[0] is C-. Position j (1-based) is the state after
    // j symbols of a block.
    std::vector<StateId> chains[2];
    for (int b = 1; b >= 0; --b) {
        for (std::size_t j = 1; j <= chain_len; ++j) {
            bool accept = (j < p.N) || (j == chain_len);
            chains[b].push_back(a.add_state(accept));
            if (j > 1) {
                a.set_transition(chains[b][j - 2], 0, chains[b][j - 1]);
                a.set_transition(chains[b][j - 2], 1, chains[b][j - 1]);
            }
        }
    }
    // exit[a][b]: block labelled a just ended, next block is labelled b.
    StateId exit[2][2];
    for (int la = 1; la >= 0; --la) {
        for (int lb = 1; lb >= 0; --lb) {
            exit[la][lb] = a.add_state(la == 1);
            a.set_transition(exit[la][lb], 0, chains[lb].front());
        }
    }
    const auto& blocks = ss.blocks;
    a.set_transition(a.initial(), 0, chains[blocks.front().positive ? 1 : 0].front());

    for (std::size_t i = 0; i < blocks.size(); ++i) {
        int la = blocks[i].positive ? 1 : 0;
        int lb = (i + 1 < blocks.size()) ? (blocks[i + 1].positive ? 1 : 0) : 1;
        std::span<const Symbol> code = enc.edge_codes[blocks[i].edge];
        StateId q = extend_path(a, chains[la].back(), code.first(code.size() - 1));
        auto existing = a.next(q, code.back());
        if (existing && *existing != exit[la][lb]) throw std::logic_error("two-chain tail conflict");
        a.set_transition(q, code.back(), exit[la][lb]);
    }

    Dfa out = complete(a);
    if (auto report = check_consistency(out, ss.sample); !report.consistent()) {
        throw std::logic_error("two-chain layout is inconsistent on " +
                               std::to_string(report.violations.size()) + " prefixes");
    }
    return out;
}

RatioReport ratio_report(const Graph& g, const Dfa& heuristic, const ReductionParams& p,
                         const Encoding& enc) {
    BinaryExtraction ex = coloring_from_binary_dfa(heuristic, g, p, enc);
    RatioReport r;
    r.m_hat = heuristic.num_states();
    r.k_hat = ex.chains.num_classes;
    r.L = p.L;
    r.k_star = static_cast<std::size_t>(chromatic_number(g).k_star);
    r.m_star_lower = r.k_star * p.L;
    if (r.k_hat > r.m_hat / r.L) throw std::logic_error("ratio chain broken: k_hat > floor(m_hat / L)");
    if (r.k_hat < r.k_star) throw std::logic_error("ratio chain broken: k_hat < k_star");
    return r;
}

}  // namespace pcdfa
