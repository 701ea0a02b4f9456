#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pcdfa {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;
using StateId = std::uint32_t;

inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

// Thrown when an input violates an operation's domain (bad symbol, mismatched
// alphabets, inconsistent machine sample, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Alphabet {
public:
    explicit Alphabet(std::size_t size);
    explicit Alphabet(std::vector<std::string> names);

    static Alphabet binary() { return Alphabet(2); }

    std::size_t size() const { return names_.size(); }
    const std::string& name(Symbol a) const;
    const std::vector<std::string>& names() const { return names_; }
    std::optional<Symbol> find(std::string_view name) const;
    bool contains(Symbol a) const { return a < names_.size(); }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> names_;
};

struct LabeledString {
    Word symbols;
    bool label = false;

    friend bool operator==(const LabeledString&, const LabeledString&) = default;
};

// Pair of disjoint finite string sets (D+, D-).
class DfaSample {
public:
    explicit DfaSample(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    // Adding the same word twice with the same label is a no-op; with the
    // opposite label it throws.
    void add(Word w, bool positive);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::set<Word>& positives() const { return positives_; }
    const std::set<Word>& negatives() const { return negatives_; }
    std::optional<bool> label_of(const Word& w) const;
    std::size_t size() const { return positives_.size() + negatives_.size(); }
    bool empty() const { return size() == 0; }

    // All labeled strings in (length, lexicographic) order.
    std::vector<LabeledString> entries() const;

    friend bool operator==(const DfaSample&, const DfaSample&) = default;

private:
    Alphabet alphabet_;
    std::set<Word> positives_;
    std::set<Word> negatives_;
};

// Dense (state, symbol) -> state table; entries may be kNoState.
class TransitionTable {
public:
    TransitionTable(Alphabet alphabet, std::size_t num_states, StateId initial);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t num_states() const { return num_states_; }
    StateId initial() const { return initial_; }
    void set_initial(StateId q);

    StateId at(StateId q, Symbol a) const;
    void set(StateId q, Symbol a, StateId to);
    StateId add_state();

    void check_state(StateId q) const;
    void check_symbol(Symbol a) const;

    friend bool operator==(const TransitionTable&, const TransitionTable&) = default;

private:
    Alphabet alphabet_;
    std::size_t num_states_;
    StateId initial_;
    std::vector<StateId> table_;
};

// DFA whose transition function may be partial. Used for ADFAs, prefix-tree
// acceptors and solver quotients.
class PartialDfa {
public:
    PartialDfa(Alphabet alphabet, std::size_t num_states, StateId initial = 0);

    const Alphabet& alphabet() const { return table_.alphabet(); }
    std::size_t num_states() const { return table_.num_states(); }
    StateId initial() const { return table_.initial(); }
    void set_initial(StateId q) { table_.set_initial(q); }

    std::optional<StateId> next(StateId q, Symbol a) const;
    void set_transition(StateId from, Symbol a, StateId to) { table_.set(from, a, to); }
    void clear_transition(StateId from, Symbol a) { table_.set(from, a, kNoState); }

    bool is_accepting(StateId q) const;
    void set_accepting(StateId q, bool accepting = true);
    std::vector<StateId> accepting_states() const;

    StateId add_state(bool accepting = false);
    bool is_total() const;

    // Final state of the run, or nullopt if it falls off a missing transition.
    std::optional<StateId> run(std::span<const Symbol> input) const;
    bool accepts(std::span<const Symbol> input) const;

    const TransitionTable& table() const { return table_; }

    friend bool operator==(const PartialDfa&, const PartialDfa&) = default;

private:
    TransitionTable table_;
    std::vector<bool> accepting_;
};

// Total DFA. Freshly created states carry self-loops on every symbol, so the
// table is total at every point of construction.
class Dfa {
public:
    Dfa(Alphabet alphabet, std::size_t num_states, StateId initial = 0);

    // Throws if `partial` has a missing transition.
    static Dfa from_total(const PartialDfa& partial);

    const Alphabet& alphabet() const { return table_.alphabet(); }
    std::size_t num_states() const { return table_.num_states(); }
    StateId initial() const { return table_.initial(); }
    void set_initial(StateId q) { table_.set_initial(q); }

    StateId next(StateId q, Symbol a) const { return table_.at(q, a); }
    void set_transition(StateId from, Symbol a, StateId to);

    bool is_accepting(StateId q) const;
    void set_accepting(StateId q, bool accepting = true);
    std::vector<StateId> accepting_states() const;

    StateId add_state(bool accepting = false);

    StateId run_from(StateId q, std::span<const Symbol> input) const;
    StateId run(std::span<const Symbol> input) const { return run_from(initial(), input); }
    bool accepts(std::span<const Symbol> input) const { return is_accepting(run(input)); }

    PartialDfa to_partial() const;
    const TransitionTable& table() const { return table_; }

    friend bool operator==(const Dfa&, const Dfa&) = default;

private:
    TransitionTable table_;
    std::vector<bool> accepting_;
};

// Output alphabet is fixed to {+, -}; true encodes '+'.
using Outputs = std::vector<bool>;

class MooreMachine {
public:
    MooreMachine(Alphabet alphabet, std::size_t num_states, StateId initial = 0);

    const Alphabet& alphabet() const { return table_.alphabet(); }
    std::size_t num_states() const { return table_.num_states(); }
    StateId initial() const { return table_.initial(); }

    StateId next(StateId q, Symbol a) const { return table_.at(q, a); }
    void set_transition(StateId from, Symbol a, StateId to);
    bool output(StateId q) const;
    void set_output(StateId q, bool plus);

    const TransitionTable& table() const { return table_; }

private:
    TransitionTable table_;
    std::vector<bool> output_;
};

class MealyMachine {
public:
    MealyMachine(Alphabet alphabet, std::size_t num_states, StateId initial = 0);

    const Alphabet& alphabet() const { return table_.alphabet(); }
    std::size_t num_states() const { return table_.num_states(); }
    StateId initial() const { return table_.initial(); }

    StateId next(StateId q, Symbol a) const { return table_.at(q, a); }
    void set_transition(StateId from, Symbol a, StateId to);
    bool output(StateId q, Symbol a) const;
    void set_output(StateId q, Symbol a, bool plus);

    const TransitionTable& table() const { return table_; }

private:
    TransitionTable table_;
    std::vector<bool> output_;
};

struct MachineRun {
    Word input;
    Outputs output;

    friend auto operator<=>(const MachineRun&, const MachineRun&) = default;
};

// Finite set of (input, output) pairs with |input| = |output|. Run consistency
// is not enforced on insertion; see find_conflict().
class MachineSample {
public:
    explicit MachineSample(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    void add(MachineRun run);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<MachineRun>& runs() const { return runs_; }
    std::size_t size() const { return runs_.size(); }

    // Indices of two runs whose outputs disagree on a common input prefix.
    std::optional<std::pair<std::size_t, std::size_t>> find_conflict() const;

    friend bool operator==(const MachineSample&, const MachineSample&) = default;

private:
    Alphabet alphabet_;
    std::vector<MachineRun> runs_;  // sorted, unique
};

struct ConsistencyReport {
    std::vector<LabeledString> violations;

    bool consistent() const { return violations.empty(); }
};

enum class PrefixCompleteness { complete, almost_complete, neither };

bool run_dfa(const Dfa& dfa, std::span<const Symbol> input);
StateId final_state(const Dfa& dfa, std::span<const Symbol> input);

ConsistencyReport check_consistency(const Dfa& dfa, const DfaSample& sample);
// A run that leaves the defined transitions counts as rejecting.
ConsistencyReport check_consistency(const PartialDfa& dfa, const DfaSample& sample);
bool is_consistent(const Dfa& dfa, const DfaSample& sample);
bool is_consistent(const PartialDfa& dfa, const DfaSample& sample);

PartialDfa prefix_tree_acceptor(const DfaSample& sample);
PrefixCompleteness is_prefix_complete(const DfaSample& sample);
bool is_acyclic(const PartialDfa& a);

// Missing transitions become self-loops; the state count is unchanged.
Dfa complete(const PartialDfa& a);

MooreMachine dfa_to_moore(const Dfa& dfa);
MealyMachine dfa_to_mealy(const Dfa& dfa);
Outputs run_moore(const MooreMachine& m, std::span<const Symbol> input);
Outputs run_mealy(const MealyMachine& m, std::span<const Symbol> input);
bool is_consistent(const MooreMachine& m, const MachineSample& sample);
bool is_consistent(const MealyMachine& m, const MachineSample& sample);

MachineSample dfa_sample_to_machine_sample(const DfaSample& sample);
DfaSample machine_sample_to_dfa_sample(const MachineSample& ms);

// "0110" -> {0,1,1,0}. Only digits are accepted.
Word digits_to_word(std::string_view digits);
std::string word_to_digits(std::span<const Symbol> w);
std::string outputs_to_string(const Outputs& out);
Outputs outputs_from_string(std::string_view signs);

const char* to_string(PrefixCompleteness c);

}  // namespace pcdfa
