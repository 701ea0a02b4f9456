#include <doctest.h>

#include "fixtures.hpp"
#include "pcdfa/witnesses.hpp"

using namespace pcdfa;
using fixtures::flip_flop;

namespace {

DfaSample sample_of(std::initializer_list<std::pair<const char*, bool>> items) {
    DfaSample s(Alphabet::binary());
    for (auto [w, lab] : items) s.add(digits_to_word(w), lab);
    return s;
}

}  // namespace

TEST_CASE("run_dfa basics") {
    Dfa one(Alphabet::binary(), 1);
    one.set_accepting(0);
    CHECK(run_dfa(one, digits_to_word("0110")));

    Dfa ff = flip_flop();
    CHECK_FALSE(run_dfa(ff, digits_to_word("00")));
    CHECK(run_dfa(ff, digits_to_word("0")));
    CHECK(final_state(ff, digits_to_word("000")) == 1);

    Word bad{2};
    CHECK_THROWS_AS(run_dfa(ff, bad), DomainError);
}

TEST_CASE("zhang witness accepts v1 e12") {
    Graph g = fixtures::five_vertex_graph();
    Dfa w = complete(zhang_dfa_from_coloring(g, fixtures::five_vertex_coloring()));
    Word v1e12{zhang_vertex_symbol(0), zhang_edge_symbol(g, 0)};
    CHECK(run_dfa(w, v1e12));
}

TEST_CASE("composition law on random splits") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        std::uniform_int_distribution<std::size_t> nstates(1, 6);
        std::size_t n = nstates(rng);
        Dfa d(Alphabet::binary(), n);
        std::uniform_int_distribution<StateId> st(0, static_cast<StateId>(n - 1));
        for (StateId q = 0; q < n; ++q) {
            d.set_accepting(q, rng() & 1U);
            for (Symbol a = 0; a < 2; ++a) d.set_transition(q, a, st(rng));
        }
        Word w = fixtures::random_word(rng, 2, 12);
        std::uniform_int_distribution<std::size_t> cut(0, w.size());
        std::size_t c = cut(rng);
        std::span<const Symbol> all(w);
        CHECK(d.run(all) == d.run_from(d.run(all.first(c)), all.subspan(c)));
    }
}

TEST_CASE("consistency reports") {
    DfaSample s = sample_of({{"0", true}, {"1", false}, {"01", true}});
    PartialDfa pta = prefix_tree_acceptor(s);
    CHECK(is_consistent(pta, s));

    Dfa reject(Alphabet::binary(), 1);
    auto rep = check_consistency(reject, s);
    CHECK_FALSE(rep.consistent());
    REQUIRE(rep.violations.size() == 2);
    CHECK(rep.violations[0].symbols == digits_to_word("0"));
    CHECK(rep.violations[1].symbols == digits_to_word("01"));

    // A run that falls off counts as rejecting.
    PartialDfa empty(Alphabet::binary(), 1);
    DfaSample neg = sample_of({{"1", false}, {"11", false}});
    CHECK(is_consistent(empty, neg));
    CHECK_FALSE(is_consistent(empty, sample_of({{"1", true}})));

    DfaSample other(Alphabet(3));
    CHECK_THROWS_AS(check_consistency(reject, other), DomainError);
}

TEST_CASE("hand-built merged ADFA is consistent with the five-vertex binary sample") {
    Graph g = fixtures::five_vertex_graph();
    ReductionParams p = default_params(g, 3);
    REQUIRE(p.L == 57);
    PartialDfa a = fixtures::merged_adfa(p.L);
    DfaSample s = binary_sample(g, p, make_encoding(g, p));
    CHECK(is_consistent(a, s));
    CHECK(is_acyclic(a));
    CHECK(a.num_states() < 4 * p.L);
}

TEST_CASE("prefix tree acceptor") {
    PartialDfa t = prefix_tree_acceptor(sample_of({{"0", true}, {"1", false}}));
    CHECK(t.num_states() == 3);
    CHECK(t.accepting_states().size() == 1);

    DfaSample eps(Alphabet::binary());
    eps.add({}, true);
    PartialDfa e = prefix_tree_acceptor(eps);
    CHECK(e.num_states() == 1);
    CHECK(e.is_accepting(0));

    // Breadth-first numbering: root, then depth-1 states, then depth 2.
    PartialDfa bf = prefix_tree_acceptor(sample_of({{"00", true}, {"1", true}}));
    CHECK(*bf.next(0, 0) == 1);
    CHECK(*bf.next(0, 1) == 2);
    CHECK(*bf.next(1, 0) == 3);
}

TEST_CASE("prefix tree acceptor of the binary sample has |Pref(S)| states") {
    Graph g = fixtures::five_vertex_graph();
    ReductionParams p = default_params(g, 3);
    DfaSample s = binary_sample(g, p, make_encoding(g, p));
    auto oracle = fixtures::binary_oracle(g, p.L);
    PartialDfa t = prefix_tree_acceptor(s);
    CHECK(t.num_states() == oracle.pos.size() + oracle.neg.size());
    CHECK(is_consistent(t, s));
    CHECK(is_acyclic(t));
}

TEST_CASE("random samples: PTA is acyclic and consistent") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        DfaSample s(Alphabet(3));
        for (int i = 0; i < 10; ++i) {
            Word w = fixtures::random_word(rng, 3, 6);
            if (!s.label_of(w)) s.add(w, rng() & 1U);
        }
        PartialDfa pta = prefix_tree_acceptor(s);
        CHECK(is_acyclic(pta));
        CHECK(is_consistent(pta, s));
    }
}

TEST_CASE("sample invariants") {
    DfaSample s(Alphabet::binary());
    s.add(digits_to_word("01"), true);
    s.add(digits_to_word("01"), true);
    CHECK(s.size() == 1);
    CHECK_THROWS_AS(s.add(digits_to_word("01"), false), DomainError);
    CHECK_THROWS_AS(s.add(Word{5}, true), DomainError);
}

TEST_CASE("prefix completeness") {
    CHECK(is_prefix_complete(sample_of({{"01", true}})) == PrefixCompleteness::neither);
    CHECK(is_prefix_complete(sample_of({{"0", true}, {"01", false}})) == PrefixCompleteness::almost_complete);
    DfaSample full = sample_of({{"0", true}, {"01", false}});
    full.add({}, false);
    CHECK(is_prefix_complete(full) == PrefixCompleteness::complete);
}

TEST_CASE("acyclicity") {
    PartialDfa loop(Alphabet::binary(), 1);
    loop.set_transition(0, 1, 0);
    CHECK_FALSE(is_acyclic(loop));

    // Cycles among unreachable states do not count.
    PartialDfa unreachable(Alphabet::binary(), 2);
    unreachable.set_transition(1, 0, 1);
    CHECK(is_acyclic(unreachable));
}

TEST_CASE("completion with self-loops") {
    Dfa ff = flip_flop();
    CHECK(complete(ff.to_partial()) == ff);

    PartialDfa bare(Alphabet::binary(), 1);
    Dfa c = complete(bare);
    CHECK(c.num_states() == 1);
    CHECK(c.next(0, 0) == 0);
    CHECK(c.next(0, 1) == 0);

    Graph g = fixtures::five_vertex_graph();
    ReductionParams p = default_params(g, 3);
    Encoding enc = make_encoding(g, p);
    DfaSample s = binary_sample(g, p, enc);
    PartialDfa w = binary_dfa_from_coloring(g, fixtures::five_vertex_coloring(), p, enc);
    Dfa cw = complete(w);
    CHECK(is_consistent(w, s));
    CHECK(is_consistent(cw, s));
    CHECK(cw.num_states() == w.num_states());
}

TEST_CASE("moore and mealy conversion") {
    Dfa ff = flip_flop();
    MooreMachine mo = dfa_to_moore(ff);
    MealyMachine me = dfa_to_mealy(ff);
    CHECK(outputs_to_string(run_moore(mo, digits_to_word("00"))) == "+-");
    CHECK(outputs_to_string(run_mealy(me, digits_to_word("00"))) == "+-");
    CHECK(outputs_to_string(run_moore(mo, digits_to_word("000"))) == "+-+");
    CHECK(run_moore(mo, Word{}).empty());
    CHECK(run_mealy(me, Word{}).empty());

    Dfa one(Alphabet::binary(), 1);
    one.set_accepting(0);
    CHECK(outputs_to_string(run_moore(dfa_to_moore(one), digits_to_word("111"))) == "+++");
    Dfa none(Alphabet::binary(), 1);
    CHECK(outputs_to_string(run_mealy(dfa_to_mealy(none), digits_to_word("0101"))) == "----");
}

TEST_CASE("moore and mealy agree on the binary witness") {
    Graph g = fixtures::five_vertex_graph();
    ReductionParams p = default_params(g, 3);
    Encoding enc = make_encoding(g, p);
    Dfa w = complete(binary_dfa_from_coloring(g, fixtures::five_vertex_coloring(), p, enc));
    MooreMachine mo = dfa_to_moore(w);
    MealyMachine me = dfa_to_mealy(w);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        Word x = fixtures::random_word(rng, 2, 80);
        Outputs a = run_moore(mo, x);
        CHECK(a == run_mealy(me, x));
        if (!x.empty()) CHECK(a.back() == w.accepts(x));
    }
    CHECK(run_moore(mo, body_end(enc, p, 0)).back());
}

TEST_CASE("dfa sample to machine sample") {
    MachineSample ms = dfa_sample_to_machine_sample(sample_of({{"0", true}, {"00", false}}));
    REQUIRE(ms.size() == 1);
    CHECK(word_to_digits(ms.runs()[0].input) == "00");
    CHECK(outputs_to_string(ms.runs()[0].output) == "+-");

    CHECK_THROWS_AS(dfa_sample_to_machine_sample(sample_of({{"01", true}})), DomainError);

    DfaSample with_eps = sample_of({{"0", true}, {"1", false}, {"10", true}});
    with_eps.add({}, true);
    DfaSample back = machine_sample_to_dfa_sample(dfa_sample_to_machine_sample(with_eps));
    CHECK(back == sample_of({{"0", true}, {"1", false}, {"10", true}}));
}

TEST_CASE("machine sample to dfa sample") {
    MachineSample a(Alphabet::binary());
    a.add({digits_to_word("00"), outputs_from_string("+-")});
    DfaSample s = machine_sample_to_dfa_sample(a);
    CHECK(s == sample_of({{"0", true}, {"00", false}}));

    MachineSample b(Alphabet::binary());
    b.add({digits_to_word("01"), outputs_from_string("+-")});
    b.add({digits_to_word("00"), outputs_from_string("++")});
    CHECK(machine_sample_to_dfa_sample(b) == sample_of({{"0", true}, {"00", true}, {"01", false}}));
    CHECK(is_prefix_complete(machine_sample_to_dfa_sample(b)) == PrefixCompleteness::almost_complete);

    MachineSample c(Alphabet::binary());
    c.add({digits_to_word("0"), outputs_from_string("+")});
    c.add({digits_to_word("01"), outputs_from_string("-+")});
    CHECK(c.find_conflict().has_value());
    CHECK_THROWS_AS(machine_sample_to_dfa_sample(c), DomainError);

    MachineSample d(Alphabet::binary());
    CHECK_THROWS_AS(d.add({digits_to_word("01"), outputs_from_string("+")}), DomainError);
}

TEST_CASE("machine consistency") {
    Dfa ff = flip_flop();
    MachineSample ms(Alphabet::binary());
    ms.add({digits_to_word("000"), outputs_from_string("+-+")});
    CHECK(is_consistent(dfa_to_moore(ff), ms));
    CHECK(is_consistent(dfa_to_mealy(ff), ms));
    ms.add({digits_to_word("1"), outputs_from_string("-")});
    CHECK_FALSE(is_consistent(dfa_to_moore(ff), ms));
}
