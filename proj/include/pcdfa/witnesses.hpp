#pragma once

#include <cstddef>
#include <vector>

#include "pcdfa/automata.hpp"
#include "pcdfa/graph.hpp"
#include "pcdfa/reductions.hpp"

namespace pcdfa {

// 0-chains traced by head(v) 0^h, h = 0..L, in a DFA consistent with a
// binary-reduction sample.
struct ChainAnalysis {
    std::vector<StateId> end_state_of_vertex;       // q_{v,L}
    std::size_t num_classes = 0;                    // distinct end states
    std::vector<std::vector<StateId>> chain_states;  // per class, L+1 states
};

struct BinaryExtraction {
    Coloring coloring;
    ChainAnalysis chains;
};

struct RatioReport {
    std::size_t m_hat = 0;
    std::size_t k_hat = 0;
    std::size_t L = 0;
    std::size_t k_star = 0;
    std::size_t m_star_lower = 0;
};

// K+1 states; state 0 is initial and the only accepting state.
PartialDfa zhang_dfa_from_coloring(const Graph& g, const Coloring& c);
Coloring coloring_from_zhang_dfa(const Dfa& m, const Graph& g);

// Acyclic witness with fewer than (K+1)L states: a head trie routed by color,
// one 0-chain per used color, and per-chain tail tries.
PartialDfa binary_dfa_from_coloring(const Graph& g, const Coloring& c, const ReductionParams& p,
                                    const Encoding& enc);
BinaryExtraction coloring_from_binary_dfa(const Dfa& m, const Graph& g, const ReductionParams& p,
                                          const Encoding& enc);

// Binary witness behind a fresh N-state 0-chain; leaves loop back into it.
Dfa single_dfa_from_coloring(const Graph& g, const Coloring& c, const ReductionParams& p,
                             const Encoding& enc);
Coloring coloring_from_single_dfa(const Dfa& m, const Graph& g, const ReductionParams& p,
                                  const Encoding& enc);

// Consistent DFA for the single-string sample with fewer than 2(N+2L) states,
// whatever the chromatic number.
Dfa two_chain_dfa(const Graph& g, const ReductionParams& p, const Encoding& enc);

RatioReport ratio_report(const Graph& g, const Dfa& heuristic, const ReductionParams& p,
                         const Encoding& enc);

}  // namespace pcdfa
