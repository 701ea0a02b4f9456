#include "pcdfa/automata.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_set>

namespace pcdfa {

namespace {

std::vector<std::string> index_names(std::size_t size) {
    std::vector<std::string> names;
    names.reserve(size);
    for (std::size_t i = 0; i < size; ++i) names.push_back(std::to_string(i));
    return names;
}

bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

void check_word(const Alphabet& alphabet, std::span<const Symbol> w) {
    for (Symbol a : w) {
        if (!alphabet.contains(a)) {
            throw DomainError("symbol " + std::to_string(a) + " outside alphabet of size " +
                              std::to_string(alphabet.size()));
        }
    }
}

void check_same_alphabet(const Alphabet& a, const Alphabet& b) {
    if (a.size() != b.size()) {
        throw DomainError("alphabet mismatch: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()) + " symbols");
    }
}

}  // namespace

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(std::size_t size) : names_(index_names(size)) {
    if (size == 0) throw DomainError("alphabet must have at least one symbol");
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw DomainError("alphabet must have at least one symbol");
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (!seen.insert(n).second) throw DomainError("duplicate alphabet symbol name '" + n + "'");
    }
}

const std::string& Alphabet::name(Symbol a) const {
    if (!contains(a)) throw DomainError("symbol " + std::to_string(a) + " outside alphabet");
    return names_[a];
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return static_cast<Symbol>(i);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- DfaSample

void DfaSample::add(Word w, bool positive) {
    check_word(alphabet_, w);
    auto& same = positive ? positives_ : negatives_;
    const auto& other = positive ? negatives_ : positives_;
    if (other.count(w)) {
        throw DomainError("string of length " + std::to_string(w.size()) +
                          " labeled both positive and negative");
    }
    same.insert(std::move(w));
}

std::optional<bool> DfaSample::label_of(const Word& w) const {
    if (positives_.count(w)) return true;
    if (negatives_.count(w)) return false;
    return std::nullopt;
}

std::vector<LabeledString> DfaSample::entries() const {
    std::vector<LabeledString> out;
    out.reserve(size());
    for (const auto& w : positives_) out.push_back({w, true});
    for (const auto& w : negatives_) out.push_back({w, false});
    std::sort(out.begin(), out.end(), [](const LabeledString& a, const LabeledString& b) {
        return shortlex_less(a.symbols, b.symbols);
    });
    return out;
}

// ---------------------------------------------------------- TransitionTable

TransitionTable::TransitionTable(Alphabet alphabet, std::size_t num_states, StateId initial)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      initial_(initial),
      table_(num_states * alphabet_.size(), kNoState) {
    if (num_states == 0) throw DomainError("automaton needs at least one state");
    check_state(initial);
}

void TransitionTable::set_initial(StateId q) {
    check_state(q);
    initial_ = q;
}

StateId TransitionTable::at(StateId q, Symbol a) const {
    check_state(q);
    check_symbol(a);
    return table_[q * alphabet_.size() + a];
}

void TransitionTable::set(StateId q, Symbol a, StateId to) {
    check_state(q);
    check_symbol(a);
    if (to != kNoState) check_state(to);
    table_[q * alphabet_.size() + a] = to;
}

StateId TransitionTable::add_state() {
    table_.resize(table_.size() + alphabet_.size(), kNoState);
    return static_cast<StateId>(num_states_++);
}

void TransitionTable::check_state(StateId q) const {
    if (q >= num_states_) {
        throw DomainError("state " + std::to_string(q) + " out of range [0, " +
                          std::to_string(num_states_) + ")");
    }
}

void TransitionTable::check_symbol(Symbol a) const {
    if (!alphabet_.contains(a)) {
        throw DomainError("symbol " + std::to_string(a) + " outside alphabet of size " +
                          std::to_string(alphabet_.size()));
    }
}

// --------------------------------------------------------------- PartialDfa

PartialDfa::PartialDfa(Alphabet alphabet, std::size_t num_states, StateId initial)
    : table_(std::move(alphabet), num_states, initial), accepting_(num_states, false) {}

std::optional<StateId> PartialDfa::next(StateId q, Symbol a) const {
    StateId to = table_.at(q, a);
    if (to == kNoState) return std::nullopt;
    return to;
}

bool PartialDfa::is_accepting(StateId q) const {
    table_.check_state(q);
    return accepting_[q];
}

void PartialDfa::set_accepting(StateId q, bool accepting) {
    table_.check_state(q);
    accepting_[q] = accepting;
}

std::vector<StateId> PartialDfa::accepting_states() const {
    std::vector<StateId> out;
    for (StateId q = 0; q < accepting_.size(); ++q) {
        if (accepting_[q]) out.push_back(q);
    }
    return out;
}

StateId PartialDfa::add_state(bool accepting) {
    accepting_.push_back(accepting);
    return table_.add_state();
}

bool PartialDfa::is_total() const {
    for (StateId q = 0; q < num_states(); ++q) {
        for (Symbol a = 0; a < alphabet().size(); ++a) {
            if (table_.at(q, a) == kNoState) return false;
        }
    }
    return true;
}

std::optional<StateId> PartialDfa::run(std::span<const Symbol> input) const {
    StateId q = initial();
    for (Symbol a : input) {
        q = table_.at(q, a);
        if (q == kNoState) return std::nullopt;
    }
    return q;
}

bool PartialDfa::accepts(std::span<const Symbol> input) const {
    auto q = run(input);
    return q && accepting_[*q];
}

// ---------------------------------------------------------------------- Dfa

Dfa::Dfa(Alphabet alphabet, std::size_t num_states, StateId initial)
    : table_(std::move(alphabet), num_states, initial), accepting_(num_states, false) {
    for (StateId q = 0; q < num_states; ++q) {
        for (Symbol a = 0; a < table_.alphabet().size(); ++a) table_.set(q, a, q);
    }
}

Dfa Dfa::from_total(const PartialDfa& partial) {
    if (!partial.is_total()) throw DomainError("automaton has missing transitions");
    return complete(partial);
}

void Dfa::set_transition(StateId from, Symbol a, StateId to) {
    table_.check_state(to);
    table_.set(from, a, to);
}

bool Dfa::is_accepting(StateId q) const {
    table_.check_state(q);
    return accepting_[q];
}

void Dfa::set_accepting(StateId q, bool accepting) {
    table_.check_state(q);
    accepting_[q] = accepting;
}

std::vector<StateId> Dfa::accepting_states() const {
    std::vector<StateId> out;
    for (StateId q = 0; q < accepting_.size(); ++q) {
        if (accepting_[q]) out.push_back(q);
    }
    return out;
}

StateId Dfa::add_state(bool accepting) {
    StateId q = table_.add_state();
    accepting_.push_back(accepting);
    for (Symbol a = 0; a < table_.alphabet().size(); ++a) table_.set(q, a, q);
    return q;
}

StateId Dfa::run_from(StateId q, std::span<const Symbol> input) const {
    for (Symbol a : input) q = table_.at(q, a);
    return q;
}

PartialDfa Dfa::to_partial() const {
    PartialDfa out(alphabet(), num_states(), initial());
    for (StateId q = 0; q < num_states(); ++q) {
        out.set_accepting(q, accepting_[q]);
        for (Symbol a = 0; a < alphabet().size(); ++a) out.set_transition(q, a, next(q, a));
    }
    return out;
}

// ------------------------------------------------------------ Moore / Mealy

MooreMachine::MooreMachine(Alphabet alphabet, std::size_t num_states, StateId initial)
    : table_(std::move(alphabet), num_states, initial), output_(num_states, false) {
    for (StateId q = 0; q < num_states; ++q) {
        for (Symbol a = 0; a < table_.alphabet().size(); ++a) table_.set(q, a, q);
    }
}

void MooreMachine::set_transition(StateId from, Symbol a, StateId to) {
    table_.check_state(to);
    table_.set(from, a, to);
}

bool MooreMachine::output(StateId q) const {
    table_.check_state(q);
    return output_[q];
}

void MooreMachine::set_output(StateId q, bool plus) {
    table_.check_state(q);
    output_[q] = plus;
}

MealyMachine::MealyMachine(Alphabet alphabet, std::size_t num_states, StateId initial)
    : table_(std::move(alphabet), num_states, initial),
      output_(num_states * table_.alphabet().size(), false) {
    for (StateId q = 0; q < num_states; ++q) {
        for (Symbol a = 0; a < table_.alphabet().size(); ++a) table_.set(q, a, q);
    }
}

void MealyMachine::set_transition(StateId from, Symbol a, StateId to) {
    table_.check_state(to);
    table_.set(from, a, to);
}

bool MealyMachine::output(StateId q, Symbol a) const {
    table_.check_state(q);
    table_.check_symbol(a);
    return output_[q * alphabet().size() + a];
}

void MealyMachine::set_output(StateId q, Symbol a, bool plus) {
    table_.check_state(q);
    table_.check_symbol(a);
    output_[q * alphabet().size() + a] = plus;
}

// ------------------------------------------------------------ MachineSample

void MachineSample::add(MachineRun run) {
    if (run.input.size() != run.output.size()) {
        throw DomainError("machine run with input length " + std::to_string(run.input.size()) +
                          " but output length " + std::to_string(run.output.size()));
    }
    check_word(alphabet_, run.input);
    auto it = std::lower_bound(runs_.begin(), runs_.end(), run);
    if (it != runs_.end() && *it == run) return;
    runs_.insert(it, std::move(run));
}

std::optional<std::pair<std::size_t, std::size_t>> MachineSample::find_conflict() const {
    struct Node {
        std::map<Symbol, std::size_t> children;
        bool output = false;
        std::size_t owner = 0;
    };
    std::vector<Node> trie(1);
    for (std::size_t r = 0; r < runs_.size(); ++r) {
        const auto& run = runs_[r];
        std::size_t node = 0;
        for (std::size_t i = 0; i < run.input.size(); ++i) {
            auto found = trie[node].children.find(run.input[i]);
            if (found == trie[node].children.end()) {
                std::size_t fresh = trie.size();
                trie.push_back({{}, run.output[i], r});
                trie[node].children.emplace(run.input[i], fresh);
                node = fresh;
            } else {
                node = found->second;
                if (trie[node].output != run.output[i]) return std::pair{trie[node].owner, r};
            }
        }
    }
    return std::nullopt;
}

// -------------------------------------------------------------- operations

bool run_dfa(const Dfa& dfa, std::span<const Symbol> input) { return dfa.accepts(input); }

StateId final_state(const Dfa& dfa, std::span<const Symbol> input) { return dfa.run(input); }

ConsistencyReport check_consistency(const Dfa& dfa, const DfaSample& sample) {
    check_same_alphabet(dfa.alphabet(), sample.alphabet());
    ConsistencyReport report;
    for (const auto& w : sample.positives()) {
        if (!dfa.accepts(w)) report.violations.push_back({w, true});
    }
    for (const auto& w : sample.negatives()) {
        if (dfa.accepts(w)) report.violations.push_back({w, false});
    }
    return report;
}

ConsistencyReport check_consistency(const PartialDfa& dfa, const DfaSample& sample) {
    check_same_alphabet(dfa.alphabet(), sample.alphabet());
    ConsistencyReport report;
    for (const auto& w : sample.positives()) {
        if (!dfa.accepts(w)) report.violations.push_back({w, true});
    }
    for (const auto& w : sample.negatives()) {
        if (dfa.accepts(w)) report.violations.push_back({w, false});
    }
    return report;
}

bool is_consistent(const Dfa& dfa, const DfaSample& sample) {
    return check_consistency(dfa, sample).consistent();
}

bool is_consistent(const PartialDfa& dfa, const DfaSample& sample) {
    return check_consistency(dfa, sample).consistent();
}

PartialDfa prefix_tree_acceptor(const DfaSample& sample) {
    const std::size_t k = sample.alphabet().size();
    // Build the trie in insertion order, then renumber breadth-first.
    std::vector<StateId> child(k, kNoState);
    std::vector<bool> accepting(1, false);
    auto insert = [&](const Word& w, bool positive) {
        StateId node = 0;
        for (Symbol a : w) {
            StateId& slot = child[node * k + a];
            if (slot == kNoState) {
                slot = static_cast<StateId>(accepting.size());
                accepting.push_back(false);
                child.resize(child.size() + k, kNoState);
            }
            node = child[node * k + a];
        }
        if (positive) accepting[node] = true;
    };
    for (const auto& w : sample.positives()) insert(w, true);
    for (const auto& w : sample.negatives()) insert(w, false);

    const std::size_t n = accepting.size();
    std::vector<StateId> order;
    std::vector<StateId> renumber(n, kNoState);
    order.reserve(n);
    order.push_back(0);
    renumber[0] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        StateId q = order[head];
        for (Symbol a = 0; a < k; ++a) {
            StateId c = child[q * k + a];
            if (c != kNoState) {
                renumber[c] = static_cast<StateId>(order.size());
                order.push_back(c);
            }
        }
    }
    PartialDfa pta(sample.alphabet(), n, 0);
    for (StateId q = 0; q < n; ++q) {
        pta.set_accepting(renumber[q], accepting[q]);
        for (Symbol a = 0; a < k; ++a) {
            StateId c = child[q * k + a];
            if (c != kNoState) pta.set_transition(renumber[q], a, renumber[c]);
        }
    }
    return pta;
}

PrefixCompleteness is_prefix_complete(const DfaSample& sample) {
    auto in_union = [&](const Word& w) {
        return sample.positives().count(w) > 0 || sample.negatives().count(w) > 0;
    };
    // Closure under one-symbol truncation implies closure under all prefixes.
    auto parents_present = [&](const std::set<Word>& words) {
        for (const auto& w : words) {
            if (w.size() <= 1) continue;
            Word parent(w.begin(), w.end() - 1);
            if (!in_union(parent)) return false;
        }
        return true;
    };
    if (!parents_present(sample.positives()) || !parents_present(sample.negatives())) {
        return PrefixCompleteness::neither;
    }
    if (sample.empty() || in_union(Word{})) return PrefixCompleteness::complete;
    return PrefixCompleteness::almost_complete;
}

bool is_acyclic(const PartialDfa& a) {
    enum : std::uint8_t { white, grey, black };
    const std::size_t k = a.alphabet().size();
    std::vector<std::uint8_t> colour(a.num_states(), white);
    // Iterative DFS: (state, next symbol to try).
    std::vector<std::pair<StateId, Symbol>> stack{{a.initial(), 0}};
    colour[a.initial()] = grey;
    while (!stack.empty()) {
        auto& [q, sym] = stack.back();
        if (sym == k) {
            colour[q] = black;
            stack.pop_back();
            continue;
        }
        auto to = a.next(q, sym++);
        if (!to) continue;
        if (colour[*to] == grey) return false;
        if (colour[*to] == white) {
            colour[*to] = grey;
            stack.emplace_back(*to, 0);
        }
    }
    return true;
}

Dfa complete(const PartialDfa& a) {
    Dfa out(a.alphabet(), a.num_states(), a.initial());
    for (StateId q = 0; q < a.num_states(); ++q) {
        out.set_accepting(q, a.is_accepting(q));
        for (Symbol s = 0; s < a.alphabet().size(); ++s) {
            if (auto to = a.next(q, s)) out.set_transition(q, s, *to);
        }
    }
    return out;
}

MooreMachine dfa_to_moore(const Dfa& dfa) {
    MooreMachine m(dfa.alphabet(), dfa.num_states(), dfa.initial());
    for (StateId q = 0; q < dfa.num_states(); ++q) {
        m.set_output(q, dfa.is_accepting(q));
        for (Symbol a = 0; a < dfa.alphabet().size(); ++a) m.set_transition(q, a, dfa.next(q, a));
    }
    return m;
}

MealyMachine dfa_to_mealy(const Dfa& dfa) {
    MealyMachine m(dfa.alphabet(), dfa.num_states(), dfa.initial());
    for (StateId q = 0; q < dfa.num_states(); ++q) {
        for (Symbol a = 0; a < dfa.alphabet().size(); ++a) {
            StateId to = dfa.next(q, a);
            m.set_transition(q, a, to);
            m.set_output(q, a, dfa.is_accepting(to));
        }
    }
    return m;
}

Outputs run_moore(const MooreMachine& m, std::span<const Symbol> input) {
    Outputs out;
    out.reserve(input.size());
    StateId q = m.initial();
    for (Symbol a : input) {
        q = m.next(q, a);
        out.push_back(m.output(q));
    }
    return out;
}

Outputs run_mealy(const MealyMachine& m, std::span<const Symbol> input) {
    Outputs out;
    out.reserve(input.size());
    StateId q = m.initial();
    for (Symbol a : input) {
        out.push_back(m.output(q, a));
        q = m.next(q, a);
    }
    return out;
}

bool is_consistent(const MooreMachine& m, const MachineSample& sample) {
    check_same_alphabet(m.alphabet(), sample.alphabet());
    return std::all_of(sample.runs().begin(), sample.runs().end(),
                       [&](const MachineRun& r) { return run_moore(m, r.input) == r.output; });
}

bool is_consistent(const MealyMachine& m, const MachineSample& sample) {
    check_same_alphabet(m.alphabet(), sample.alphabet());
    return std::all_of(sample.runs().begin(), sample.runs().end(),
                       [&](const MachineRun& r) { return run_mealy(m, r.input) == r.output; });
}

MachineSample dfa_sample_to_machine_sample(const DfaSample& sample) {
    if (is_prefix_complete(sample) == PrefixCompleteness::neither) {
        throw DomainError("sample is not (almost) prefix-complete; per-position outputs undefined");
    }
    MachineSample ms(sample.alphabet());
    const std::size_t k = sample.alphabet().size();
    auto emit_maximal = [&](const Word& w) {
        if (w.empty()) return;
        Word ext = w;
        ext.push_back(0);
        for (Symbol a = 0; a < k; ++a) {
            ext.back() = a;
            if (sample.label_of(ext)) return;
        }
        MachineRun run{w, {}};
        run.output.reserve(w.size());
        Word prefix;
        for (Symbol a : w) {
            prefix.push_back(a);
            run.output.push_back(sample.positives().count(prefix) > 0);
        }
        ms.add(std::move(run));
    };
    for (const auto& w : sample.positives()) emit_maximal(w);
    for (const auto& w : sample.negatives()) emit_maximal(w);
    return ms;
}

namespace {

std::string describe_run(const MachineRun& r) {
    std::string in;
    for (std::size_t i = 0; i < r.input.size(); ++i) {
        if (i) in += ' ';
        in += std::to_string(r.input[i]);
    }
    return "(" + in + " / " + outputs_to_string(r.output) + ")";
}

}  // namespace

DfaSample machine_sample_to_dfa_sample(const MachineSample& ms) {
    if (auto conflict = ms.find_conflict()) {
        throw DomainError("inconsistent machine sample: runs " +
                          describe_run(ms.runs()[conflict->first]) + " and " +
                          describe_run(ms.runs()[conflict->second]) +
                          " disagree on a common prefix");
    }
    DfaSample out(ms.alphabet());
    for (const auto& run : ms.runs()) {
        Word prefix;
        for (std::size_t i = 0; i < run.input.size(); ++i) {
            prefix.push_back(run.input[i]);
            out.add(prefix, run.output[i]);
        }
    }
    return out;
}

Word digits_to_word(std::string_view digits) {
    Word w;
    w.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '9') throw DomainError(std::string("not a digit: '") + c + "'");
        w.push_back(static_cast<Symbol>(c - '0'));
    }
    return w;
}

std::string word_to_digits(std::span<const Symbol> w) {
    std::string out;
    out.reserve(w.size());
    for (Symbol a : w) {
        if (a > 9) throw DomainError("symbol " + std::to_string(a) + " has no single-digit form");
        out.push_back(static_cast<char>('0' + a));
    }
    return out;
}

std::string outputs_to_string(const Outputs& out) {
    std::string s;
    s.reserve(out.size());
    for (bool b : out) s.push_back(b ? '+' : '-');
    return s;
}

Outputs outputs_from_string(std::string_view signs) {
    Outputs out;
    out.reserve(signs.size());
    for (char c : signs) {
        if (c == '+') {
            out.push_back(true);
        } else if (c == '-') {
            out.push_back(false);
        } else {
            throw DomainError(std::string("output symbol must be '+' or '-', got '") + c + "'");
        }
    }
    return out;
}

const char* to_string(PrefixCompleteness c) {
    switch (c) {
        case PrefixCompleteness::complete: return "complete";
        case PrefixCompleteness::almost_complete: return "almost_complete";
        case PrefixCompleteness::neither: return "neither";
    }
    return "neither";
}

}  // namespace pcdfa
