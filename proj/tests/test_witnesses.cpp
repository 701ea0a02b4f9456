#include <doctest.h>

#include "fixtures.hpp"
#include "pcdfa/solver.hpp"
#include "pcdfa/witnesses.hpp"

using namespace pcdfa;

TEST_CASE("zhang witness") {
    Graph g = fixtures::five_vertex_graph();
    PartialDfa w = zhang_dfa_from_coloring(g, fixtures::five_vertex_coloring());
    CHECK(w.num_states() == 4);
    CHECK(is_consistent(w, zhang_sample(g)));
    CHECK(w.accepting_states() == std::vector<StateId>{0});

    Graph p2 = path_graph(2);
    PartialDfa e = zhang_dfa_from_coloring(p2, Coloring{{1, 2}, 2});
    CHECK(e.num_states() == 3);
    CHECK(is_consistent(e, zhang_sample(p2)));

    PartialDfa z = zhang_dfa_from_coloring(Graph(4), Coloring{{1, 1, 1, 1}, 1});
    CHECK(z.num_states() == 2);
    CHECK(is_consistent(z, zhang_sample(Graph(4))));

    CHECK_THROWS(zhang_dfa_from_coloring(g, Coloring{{1, 1, 2, 3, 1}, 3}));
}

TEST_CASE("zhang extraction") {
    Graph g = fixtures::five_vertex_graph();
    Dfa w = complete(zhang_dfa_from_coloring(g, fixtures::five_vertex_coloring()));
    Coloring c = coloring_from_zhang_dfa(w, g);
    CHECK(is_proper_coloring(g, c));
    CHECK(c.num_colors == 3);

    Dfa two(zhang_alphabet(Graph(3)), 2);
    two.set_accepting(0);
    for (Symbol a = 0; a < 3; ++a) two.set_transition(0, a, 1);
    Coloring one = coloring_from_zhang_dfa(two, Graph(3));
    CHECK(one.num_colors == 1);

    Graph k3 = complete_graph(3);
    SolveOutcome s = exists_consistent({zhang_sample(k3), 4, false, std::nullopt});
    REQUIRE(s.status == SolveStatus::sat);
    Coloring back = coloring_from_zhang_dfa(s.total_witness(), k3);
    CHECK(is_proper_coloring(k3, back));
    CHECK(back.num_colors == 3);

    Dfa wrong(zhang_alphabet(g), 1);
    CHECK_THROWS_AS(coloring_from_zhang_dfa(wrong, g), DomainError);
}

TEST_CASE("binary witness sizes") {
    for (auto [g, L, bound] : {std::tuple{fixtures::five_vertex_graph(), 57UL, 228UL}, std::tuple{complete_graph(3), 25UL, 100UL}}) {
        ReductionParams p = default_params(g, 3);
        CHECK(p.L == L);
        Encoding enc = make_encoding(g, p);
        Coloring c = chromatic_number(g).witness;
        PartialDfa w = binary_dfa_from_coloring(g, c, p, enc);
        CHECK(is_consistent(w, binary_sample(g, p, enc)));
        CHECK(is_acyclic(w));
        CHECK(w.num_states() < bound);
        CHECK(w.num_states() < 4 * g.num_vertices() + 3 * p.L + 2 * g.num_edges() * p.tail_len);
    }
}

TEST_CASE("binary extraction") {
    Graph g = fixtures::five_vertex_graph();
    ReductionParams p = default_params(g, 3);
    Encoding enc = make_encoding(g, p);
    Dfa w = complete(binary_dfa_from_coloring(g, fixtures::five_vertex_coloring(), p, enc));
    BinaryExtraction ex = coloring_from_binary_dfa(w, g, p, enc);
    CHECK(is_proper_coloring(g, ex.coloring));
    CHECK(ex.chains.num_classes <= 3);
    CHECK(ex.chains.num_classes * p.L <= w.num_states());
    for (const auto& chain : ex.chains.chain_states) CHECK(chain.size() == p.L + 1);

    // The hand-built ADFA groups vertices exactly as its colors.
    Dfa merged = complete(fixtures::merged_adfa(p.L));
    BinaryExtraction f3 = coloring_from_binary_dfa(merged, g, p, enc);
    CHECK(f3.coloring.colors == std::vector<int>{1, 2, 3, 1, 1});

    DfaSample s = binary_sample(g, p, enc);
    Dfa pta = complete(prefix_tree_acceptor(s));
    BinaryExtraction t = coloring_from_binary_dfa(pta, g, p, enc);
    CHECK(t.chains.num_classes == 5);
    CHECK(is_proper_coloring(g, t.coloring));

    Dfa bogus(Alphabet::binary(), 3);
    CHECK_THROWS_AS(coloring_from_binary_dfa(bogus, g, p, enc), DomainError);
}

TEST_CASE("triangle PTA yields three classes") {
    Graph g = complete_graph(3);
    ReductionParams p = default_params(g, 3);
    Encoding enc = make_encoding(g, p);
    Dfa pta = complete(prefix_tree_acceptor(binary_sample(g, p, enc)));
    BinaryExtraction t = coloring_from_binary_dfa(pta, g, p, enc);
    CHECK(t.chains.num_classes == 3);
}

TEST_CASE("binary round trip on random graphs") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 20; ++t) {
        Graph g = random_graph(7, 0.4, rng);
        if (g.num_edges() == 0) continue;
        ChromaticOutcome chi = chromatic_number(g);
        const int K = chi.k_star;
        ReductionParams p = default_params(g, K);
        Encoding enc = make_encoding(g, p);
        PartialDfa w = binary_dfa_from_coloring(g, chi.witness, p, enc);
        DfaSample s = binary_sample(g, p, enc);
        CHECK(is_consistent(w, s));
        CHECK(w.num_states() < static_cast<std::size_t>(K + 1) * p.L);
        BinaryExtraction ex = coloring_from_binary_dfa(complete(w), g, p, enc);
        CHECK(is_proper_coloring(g, ex.coloring));
        CHECK(ex.chains.num_classes <= static_cast<std::size_t>(K));

        // Any consistent DFA works, including the greedy learner's.
        Dfa h = rpni(s);
        BinaryExtraction hx = coloring_from_binary_dfa(h, g, p, enc);
        CHECK(is_proper_coloring(g, hx.coloring));
        CHECK(hx.chains.num_classes * p.L <= h.num_states());
    }
}

TEST_CASE("binary witness rejects a palette over K") {
    Graph g = complete_graph(3);
    ReductionParams p = default_params(g, 2);
    CHECK_THROWS(binary_dfa_from_coloring(g, Coloring{{1, 2, 3}, 3}, p, make_encoding(g, p)));
}

TEST_CASE("single-string witness") {
    for (const Graph& g : {complete_graph(3), fixtures::five_vertex_graph()}) {
        ReductionParams p = default_params(g, 3);
        Encoding enc = make_encoding(g, p);
        SingleString ss = single_string(g, p, enc);
        Dfa w = single_dfa_from_coloring(g, chromatic_number(g).witness, p, enc);
        CHECK(is_consistent(w, ss.sample));
        CHECK(w.num_states() <= p.N + 4 * p.L);
        Word zeros(p.N, 0);
        CHECK_FALSE(w.accepts(zeros));
        Coloring c = coloring_from_single_dfa(w, g, p, enc);
        CHECK(is_proper_coloring(g, c));
        CHECK(c.num_colors <= 3);
    }
    Graph k3 = complete_graph(3);
    ReductionParams p = default_params(k3, 3);
    CHECK(p.N + 4 * p.L == 201);
}

TEST_CASE("single-string extraction errors") {
    Graph g = complete_graph(3);
    ReductionParams p = default_params(g, 3);
    Encoding enc = make_encoding(g, p);
    Dfa w = single_dfa_from_coloring(g, Coloring{{1, 2, 3}, 3}, p, enc);
    Dfa doctored = w;
    doctored.set_accepting(doctored.initial(), true);
    CHECK_THROWS_AS(coloring_from_single_dfa(doctored, g, p, enc), DomainError);

    ReductionParams tight = p;
    tight.N = 4 * p.L;
    CHECK_THROWS(single_dfa_from_coloring(g, Coloring{{1, 2, 3}, 3}, tight, enc));
}

TEST_CASE("two-chain DFA stays under 2(N+2L)") {
    for (const Graph& g : {complete_graph(3), fixtures::five_vertex_graph(), complete_graph(4), cycle_graph(5), path_graph(2)}) {
        ReductionParams p = default_params(g, chromatic_number(g).k_star);
        Encoding enc = make_encoding(g, p);
        Dfa d = two_chain_dfa(g, p, enc);
        CHECK(is_consistent(d, single_string(g, p, enc).sample));
        CHECK(d.num_states() < 2 * (p.N + 2 * p.L));
    }
    Graph k3 = complete_graph(3);
    ReductionParams p = default_params(k3, 3);
    CHECK(2 * (p.N + 2 * p.L) == 302);
}

TEST_CASE("ratio report") {
    Graph g = complete_graph(3);
    ReductionParams p = default_params(g, 3);
    Encoding enc = make_encoding(g, p);
    DfaSample s = binary_sample(g, p, enc);
    Dfa pta = complete(prefix_tree_acceptor(s));
    RatioReport r = ratio_report(g, pta, p, enc);
    CHECK(r.k_hat == 3);
    CHECK(r.k_star == 3);
    CHECK(r.m_hat == s.size());
    CHECK(r.m_star_lower == 3 * p.L);

    Graph f = fixtures::five_vertex_graph();
    ReductionParams fp = default_params(f, 3);
    Encoding fenc = make_encoding(f, fp);
    Dfa wit = complete(binary_dfa_from_coloring(f, fixtures::five_vertex_coloring(), fp, fenc));
    RatioReport wr = ratio_report(f, wit, fp, fenc);
    CHECK(wr.k_hat <= 3);
    CHECK(wr.m_hat < 228);
}
