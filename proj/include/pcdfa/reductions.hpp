#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pcdfa/automata.hpp"
#include "pcdfa/graph.hpp"

namespace pcdfa {

// Knobs of the binary and single-string constructions.
//   body_length (L):      length of the 0-run between head and tail.
//   separator_length (N): length of the 0-run opening every block of the single string.
//   head_len / tail_len:  bit widths of the vertex and edge codes.
struct ReductionParams {
    int K = 1;
    std::size_t L = 1;
    std::size_t N = 1;
    std::size_t head_len = 1;
    std::size_t tail_len = 1;

    friend bool operator==(const ReductionParams&, const ReductionParams&) = default;
};

// Vertex and edge codes. Codes within each family are distinct; a vertex
// code may coincide with an edge code.
struct Encoding {
    std::vector<Word> vertex_codes;
    std::vector<Word> edge_codes;  // indexed like Graph::edges()

    friend bool operator==(const Encoding&, const Encoding&) = default;
};

// max(1, ceil(log2 n)); n = 0 and n = 1 both give 1.
std::size_t code_width(std::size_t n);

// Smallest legal L and N for the given graph and color budget.
ReductionParams default_params(const Graph& g, int K);

// Human-readable descriptions of every violated lower bound; empty when the
// lemmas apply to the instance.
std::vector<std::string> param_violations(const Graph& g, const ReductionParams& p);

Encoding make_encoding(const Graph& g, const ReductionParams& p);

// ------------------------------------------------------------------ Zhang
// Alphabet: symbols 0..|V|-1 are vertices, |V|..|V|+|E|-1 are edges in
// canonical order.
Alphabet zhang_alphabet(const Graph& g);
Symbol zhang_vertex_symbol(Vertex v);
Symbol zhang_edge_symbol(const Graph& g, std::size_t edge_index);
DfaSample zhang_sample(const Graph& g);

// ----------------------------------------------------------------- binary
// One element head(v) 0^L tail(e) of S per incident (vertex, edge) pair.
struct ReductionString {
    Vertex head = 0;
    std::size_t edge = 0;
    Word word;
    bool positive = false;  // head is the smaller endpoint of the edge
};

// S in canonical order: by head vertex, then by edge index.
std::vector<ReductionString> reduction_strings(const Graph& g, const ReductionParams& p,
                                               const Encoding& enc);

// head(v) 0^L for every vertex, i.e. the body-end positives.
Word body_end(const Encoding& enc, const ReductionParams& p, Vertex v);

DfaSample binary_sample(const Graph& g, const ReductionParams& p, const Encoding& enc);

// ---------------------------------------------------------- single string
struct SingleString {
    Word str;
    DfaSample sample;   // every prefix of str, epsilon included
    MachineSample run;  // the single run (str, labels)
    std::size_t block_length = 0;
    std::vector<ReductionString> blocks;  // S in the order used inside str
};

SingleString single_string(const Graph& g, const ReductionParams& p, const Encoding& enc);

// Labels of the nonempty prefixes of str, position i holding the label of
// the prefix of length i + 1.
Outputs single_string_labels(const Graph& g, const ReductionParams& p, const Encoding& enc);

}  // namespace pcdfa
