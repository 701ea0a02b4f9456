#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pcdfa {

using Vertex = std::uint32_t;

// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. edges() is kept in canonical
// (min, max) order, which also fixes the edge indexing used by the reductions.
class Graph {
public:
    explicit Graph(std::size_t num_vertices);

    // Duplicate edges collapse; self-loops and out-of-range vertices throw.
    void add_edge(Vertex a, Vertex b);

    std::size_t num_vertices() const { return adjacency_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(Vertex a, Vertex b) const;
    std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

    friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.num_vertices() == b.num_vertices(); }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

// Map V -> [1, K].
struct Coloring {
    std::vector<int> colors;
    int num_colors = 0;

    // Number of distinct colors actually used.
    int used_colors() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

bool is_proper_coloring(const Graph& g, const Coloring& c);

struct ChromaticOutcome {
    bool within_bound = true;  // false: chromatic number exceeds the requested bound
    int k_star = 0;
    Coloring witness;
};

// Exact branch-and-bound. With an upper bound, graphs needing more colors
// report within_bound = false instead of a coloring.
ChromaticOutcome chromatic_number(const Graph& g, std::optional<int> upper_bound = std::nullopt);

// Relabels colors to 1..k in order of first vertex occurrence.
Coloring normalize_coloring(const Coloring& c);

Graph parse_dimacs(std::string_view text);
std::string emit_dimacs(const Graph& g);

// FNV-1a over the canonical DIMACS text, as 16 hex digits.
std::string graph_hash(const Graph& g);

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);

}  // namespace pcdfa
