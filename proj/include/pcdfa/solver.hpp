#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "pcdfa/automata.hpp"

namespace pcdfa {

struct SolveRequest {
    DfaSample sample;
    std::size_t max_states = 1;
    bool require_acyclic = false;
    std::optional<double> time_budget_seconds;
};

enum class SolveStatus { sat, unsat, timeout };

struct SolveOutcome {
    SolveStatus status = SolveStatus::unsat;
    // Quotient of the prefix-tree acceptor; transitions not exercised by the
    // sample stay undefined. Present iff status == sat.
    std::optional<PartialDfa> witness;
    std::uint64_t states_explored = 0;

    // Witness completed with self-loops.
    Dfa total_witness() const;
};

enum class MinStatus { found, bound_exceeded, timeout };

struct MinResult {
    MinStatus status = MinStatus::bound_exceeded;
    std::size_t m_star = 0;  // valid when status == found
    std::optional<PartialDfa> witness;
    std::uint64_t states_explored = 0;
};

// Exact decision: is there a DFA (an ADFA if require_acyclic) with at most
// max_states states consistent with the sample?
SolveOutcome exists_consistent(const SolveRequest& req);

// Smallest consistent size, trying m = 1, 2, ... up to upper_bound.
MinResult min_consistent(const DfaSample& sample, std::size_t upper_bound, bool require_acyclic = false,
                         std::optional<double> time_budget_seconds = std::nullopt);

// Exhaustive enumeration of every total DFA with up to m_max states. Limited
// to m_max <= 3 over alphabets of at most two symbols.
MinResult brute_force_min(const DfaSample& sample, std::size_t m_max);

// Greedy red-blue state merging over the prefix-tree acceptor, blue states in
// breadth-first order, merge kept iff the fold stays consistent.
Dfa rpni(const DfaSample& sample);

const char* to_string(SolveStatus s);

}  // namespace pcdfa
