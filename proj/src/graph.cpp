#include "pcdfa/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>

#include "pcdfa/automata.hpp"

namespace pcdfa {

Graph::Graph(std::size_t num_vertices) : adjacency_(num_vertices) {
    if (num_vertices == 0) throw DomainError("graph needs at least one vertex");
}

void Graph::add_edge(Vertex a, Vertex b) {
    if (a >= num_vertices() || b >= num_vertices()) {
        throw DomainError("edge endpoint out of range");
    }
    if (a == b) throw DomainError("self-loop on vertex " + std::to_string(a));
    Edge e{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return;
    edges_.insert(it, e);
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
    std::sort(adjacency_[a].begin(), adjacency_[a].end());
    std::sort(adjacency_[b].begin(), adjacency_[b].end());
}

bool Graph::has_edge(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
    Edge e{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

int Coloring::used_colors() const {
    std::set<int> distinct(colors.begin(), colors.end());
    return static_cast<int>(distinct.size());
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
    if (c.colors.size() != g.num_vertices()) {
        throw DomainError("coloring has " + std::to_string(c.colors.size()) + " entries for " +
                          std::to_string(g.num_vertices()) + " vertices");
    }
    for (int col : c.colors) {
        if (col < 1 || col > c.num_colors) return false;
    }
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return c.colors[e.u] != c.colors[e.v]; });
}

Coloring normalize_coloring(const Coloring& c) {
    std::vector<int> relabel;
    Coloring out;
    out.colors.reserve(c.colors.size());
    for (int col : c.colors) {
        auto it = std::find(relabel.begin(), relabel.end(), col);
        if (it == relabel.end()) {
            relabel.push_back(col);
            it = relabel.end() - 1;
        }
        out.colors.push_back(static_cast<int>(it - relabel.begin()) + 1);
    }
    out.num_colors = static_cast<int>(relabel.size());
    return out;
}

namespace {

class ColoringSearch {
public:
    explicit ColoringSearch(const Graph& g) : g_(g), colors_(g.num_vertices(), 0) {
        order_.resize(g.num_vertices());
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    }

    std::vector<int> greedy() const {
        std::vector<int> colors(g_.num_vertices(), 0);
        for (Vertex v : order_) {
            int c = 1;
            while (std::any_of(g_.neighbors(v).begin(), g_.neighbors(v).end(),
                               [&](Vertex u) { return colors[u] == c; })) {
                ++c;
            }
            colors[v] = c;
        }
        return colors;
    }

    // Looks for colorings with fewer than `limit` colors.
    void run(int limit) {
        best_count_ = limit;
        assign(0, 0);
    }

    int best_count() const { return best_count_; }
    const std::vector<int>& best() const { return best_; }

private:
    void assign(std::size_t pos, int used) {
        if (used >= best_count_) return;
        if (pos == order_.size()) {
            best_count_ = used;
            best_ = colors_;
            return;
        }
        Vertex v = order_[pos];
        // A new color may only be max-so-far + 1.
        for (int c = 1; c <= used + 1 && c < best_count_; ++c) {
            bool clash = std::any_of(g_.neighbors(v).begin(), g_.neighbors(v).end(),
                                     [&](Vertex u) { return colors_[u] == c; });
            if (clash) continue;
            colors_[v] = c;
            assign(pos + 1, std::max(used, c));
            colors_[v] = 0;
        }
    }

    const Graph& g_;
    std::vector<Vertex> order_;
    std::vector<int> colors_;
    std::vector<int> best_;
    int best_count_ = 0;
};

}  // namespace

ChromaticOutcome chromatic_number(const Graph& g, std::optional<int> upper_bound) {
    ColoringSearch search(g);
    std::vector<int> greedy = search.greedy();
    int greedy_count = *std::max_element(greedy.begin(), greedy.end());
    int limit = greedy_count;
    if (upper_bound && *upper_bound < limit) limit = *upper_bound + 1;
    search.run(limit);

    ChromaticOutcome out;
    if (!search.best().empty()) {
        out.k_star = search.best_count();
        out.witness = normalize_coloring(Coloring{search.best(), search.best_count()});
    } else {
        out.k_star = limit;
        if (limit == greedy_count) out.witness = normalize_coloring(Coloring{greedy, greedy_count});
    }
    if (upper_bound && out.k_star > *upper_bound) {
        // k_star is then only a lower bound.
        out.within_bound = false;
        out.witness = Coloring{};
    }
    return out;
}

Graph parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    std::optional<Graph> g;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            long long n = 0;
            long long m = 0;
            if (g) throw ParseError(lineno, "duplicate problem line");
            if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "col") || n <= 0 || m < 0) {
                throw ParseError(lineno, "malformed header, expected 'p edge <n> <m>'");
            }
            g.emplace(static_cast<std::size_t>(n));
        } else if (tag == "e") {
            if (!g) throw ParseError(lineno, "edge line before problem line");
            long long u = 0;
            long long v = 0;
            if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge line");
            auto n = static_cast<long long>(g->num_vertices());
            if (u < 1 || v < 1 || u > n || v > n) {
                throw ParseError(lineno, "vertex index out of range [1, " + std::to_string(n) + "]");
            }
            if (u == v) throw ParseError(lineno, "self-loop on vertex " + std::to_string(u));
            g->add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        } else {
            throw ParseError(lineno, "unknown line type '" + tag + "'");
        }
    }
    if (!g) throw ParseError(lineno, "missing problem line");
    return *g;
}

std::string emit_dimacs(const Graph& g) {
    std::string out = "p edge " + std::to_string(g.num_vertices()) + " " +
                      std::to_string(g.num_edges()) + "\n";
    for (const Edge& e : g.edges()) {
        out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
    }
    return out;
}

std::string graph_hash(const Graph& g) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : emit_dimacs(g)) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw DomainError("cycle needs at least 3 vertices");
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) g.add_edge(u, static_cast<Vertex>((u + 1) % n));
    return g;
}

Graph path_graph(std::size_t n) {
    Graph g(n);
    for (Vertex u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

}  // namespace pcdfa
