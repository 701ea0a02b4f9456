#include "pcdfa/solver.hpp"

#include <chrono>
#include <cmath>

namespace pcdfa {

namespace {

using Clock = std::chrono::steady_clock;

enum Label : std::int8_t { unknown = -1, negative = 0, positive = 1 };

// Partition of prefix-tree states under merge-and-fold, with an undo trail so
// the exact search can backtrack cheaply.
class Quotient {
public:
    explicit Quotient(const DfaSample& sample)
        : pta_(prefix_tree_acceptor(sample)), k_(sample.alphabet().size()) {
        const std::size_t n = pta_.num_states();
        parent_.resize(n);
        for (StateId q = 0; q < n; ++q) parent_[q] = q;
        child_.assign(n * k_, kNoState);
        for (StateId q = 0; q < n; ++q) {
            for (Symbol a = 0; a < k_; ++a) {
                if (auto to = pta_.next(q, a)) child_[q * k_ + a] = *to;
            }
        }
        label_.assign(n, unknown);
        for (const auto& w : sample.positives()) label_[*pta_.run(w)] = positive;
        for (const auto& w : sample.negatives()) label_[*pta_.run(w)] = negative;
    }

    std::size_t size() const { return parent_.size(); }
    std::size_t alphabet_size() const { return k_; }
    StateId root() const { return pta_.initial(); }

    StateId find(StateId x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    StateId child_class(StateId rep, Symbol a) const {
        StateId c = child_[rep * k_ + a];
        return c == kNoState ? kNoState : find(c);
    }

    Label label(StateId rep) const { return static_cast<Label>(label_[rep]); }

    // Folds the class of `blue` into the class of `red`, determinizing as it
    // goes. Returns false on a label clash; the caller must then undo().
    bool merge(StateId red, StateId blue) {
        work_.clear();
        work_.emplace_back(red, blue);
        while (!work_.empty()) {
            auto [x, y] = work_.back();
            work_.pop_back();
            x = find(x);
            y = find(y);
            if (x == y) continue;
            if (label_[y] != unknown) {
                if (label_[x] == unknown) {
                    record(Field::label, x, static_cast<StateId>(label_[x]));
                    label_[x] = label_[y];
                } else if (label_[x] != label_[y]) {
                    return false;
                }
            }
            record(Field::parent, y, parent_[y]);
            parent_[y] = x;
            for (Symbol a = 0; a < k_; ++a) {
                StateId cy = child_[y * k_ + a];
                if (cy == kNoState) continue;
                StateId& cx = child_[x * k_ + a];
                if (cx == kNoState) {
                    record(Field::child, x * k_ + a, cx);
                    cx = cy;
                } else {
                    work_.emplace_back(cx, cy);
                }
            }
        }
        return true;
    }

    std::size_t mark() const { return trail_.size(); }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            auto [field, index, old] = trail_.back();
            trail_.pop_back();
            switch (field) {
                case Field::parent: parent_[index] = old; break;
                case Field::child: child_[index] = old; break;
                case Field::label: label_[index] = static_cast<std::int8_t>(static_cast<std::int32_t>(old)); break;
            }
        }
    }

    void commit() { trail_.clear(); }

    // No cycle among classes reachable from the root.
    bool acyclic() const {
        enum : std::uint8_t { white, grey, black };
        std::vector<std::uint8_t> colour(size(), white);
        std::vector<std::pair<StateId, Symbol>> stack{{find(root()), 0}};
        colour[stack.back().first] = grey;
        while (!stack.empty()) {
            auto& [q, sym] = stack.back();
            if (sym == k_) {
                colour[q] = black;
                stack.pop_back();
                continue;
            }
            StateId to = child_class(q, sym++);
            if (to == kNoState) continue;
            if (colour[to] == grey) return false;
            if (colour[to] == white) {
                colour[to] = grey;
                stack.emplace_back(to, 0);
            }
        }
        return true;
    }

    PartialDfa extract(const std::vector<StateId>& reds, const Alphabet& alphabet) const {
        std::vector<StateId> index(size(), kNoState);
        for (std::size_t i = 0; i < reds.size(); ++i) index[reds[i]] = static_cast<StateId>(i);
        PartialDfa out(alphabet, reds.size(), index[find(root())]);
        for (std::size_t i = 0; i < reds.size(); ++i) {
            StateId r = reds[i];
            out.set_accepting(static_cast<StateId>(i), label(r) == positive);
            for (Symbol a = 0; a < k_; ++a) {
                StateId c = child_class(r, a);
                if (c != kNoState) out.set_transition(static_cast<StateId>(i), a, index[c]);
            }
        }
        return out;
    }

private:
    enum class Field : std::uint8_t { parent, child, label };

    void record(Field f, std::size_t index, StateId old) { trail_.push_back({f, index, old}); }

    struct TrailEntry {
        Field field;
        std::size_t index;
        StateId old;
    };

    PartialDfa pta_;
    std::size_t k_;
    std::vector<StateId> parent_;
    std::vector<StateId> child_;
    std::vector<std::int8_t> label_;
    std::vector<TrailEntry> trail_;
    std::vector<std::pair<StateId, StateId>> work_;
};

// Red states are the final DFA states, in promotion order. Blue states are
// non-red children of red states; they are still untouched subtrees.
class RedBlue {
public:
    explicit RedBlue(Quotient& q) : q_(q), is_red_(q.size(), 0) { promote(q.root()); }

    std::optional<StateId> pick_blue() const {
        StateId best = kNoState;
        for (StateId r : reds_) {
            for (Symbol a = 0; a < q_.alphabet_size(); ++a) {
                StateId c = q_.child_class(r, a);
                if (c != kNoState && !is_red_[c] && c < best) best = c;
            }
        }
        if (best == kNoState) return std::nullopt;
        return best;
    }

    void promote(StateId s) {
        reds_.push_back(s);
        is_red_[s] = 1;
    }

    void demote_last() {
        is_red_[reds_.back()] = 0;
        reds_.pop_back();
    }

    const std::vector<StateId>& reds() const { return reds_; }

private:
    Quotient& q_;
    std::vector<StateId> reds_;
    std::vector<std::uint8_t> is_red_;
};

class ExactSearch {
public:
    ExactSearch(const SolveRequest& req, Clock::time_point deadline, bool has_deadline)
        : req_(req), q_(req.sample), rb_(q_), deadline_(deadline), has_deadline_(has_deadline) {}

    SolveOutcome run() {
        SolveOutcome out;
        bool found = req_.max_states >= 1 && search();
        out.states_explored = explored_;
        if (found) {
            out.status = SolveStatus::sat;
            out.witness = q_.extract(rb_.reds(), req_.sample.alphabet());
        } else {
            out.status = timed_out_ ? SolveStatus::timeout : SolveStatus::unsat;
        }
        return out;
    }

private:
    bool search() {
        ++explored_;
        if (has_deadline_ && (explored_ & 255) == 1 && Clock::now() >= deadline_) timed_out_ = true;
        if (timed_out_) return false;

        auto blue = rb_.pick_blue();
        if (!blue) return true;
        // Copy: reds() may grow inside the recursion.
        const std::vector<StateId> reds = rb_.reds();
        for (StateId r : reds) {
            std::size_t mark = q_.mark();
            if (q_.merge(r, *blue) && (!req_.require_acyclic || q_.acyclic())) {
                if (search()) return true;
                if (timed_out_) return false;
            }
            q_.undo(mark);
        }
        if (reds.size() < req_.max_states) {
            rb_.promote(*blue);
            if (search()) return true;
            rb_.demote_last();
        }
        return false;
    }

    const SolveRequest& req_;
    Quotient q_;
    RedBlue rb_;
    Clock::time_point deadline_;
    bool has_deadline_;
    bool timed_out_ = false;
    std::uint64_t explored_ = 0;
};

Clock::time_point deadline_after(std::optional<double> seconds) {
    if (!seconds) return Clock::time_point::max();
    return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*seconds));
}

}  // namespace

Dfa SolveOutcome::total_witness() const {
    if (!witness) throw DomainError("no witness: status is not sat");
    return complete(*witness);
}

SolveOutcome exists_consistent(const SolveRequest& req) {
    ExactSearch search(req, deadline_after(req.time_budget_seconds), req.time_budget_seconds.has_value());
    return search.run();
}

MinResult min_consistent(const DfaSample& sample, std::size_t upper_bound, bool require_acyclic,
                         std::optional<double> time_budget_seconds) {
    if (upper_bound == 0) throw DomainError("upper bound must be at least 1");
    const auto start = Clock::now();
    MinResult result;
    for (std::size_t m = 1; m <= upper_bound; ++m) {
        SolveRequest req{sample, m, require_acyclic, std::nullopt};
        if (time_budget_seconds) {
            double used = std::chrono::duration<double>(Clock::now() - start).count();
            req.time_budget_seconds = std::max(0.0, *time_budget_seconds - used);
        }
        SolveOutcome out = exists_consistent(req);
        result.states_explored += out.states_explored;
        if (out.status == SolveStatus::sat) {
            result.status = MinStatus::found;
            result.m_star = m;
            result.witness = std::move(out.witness);
            return result;
        }
        if (out.status == SolveStatus::timeout) {
            result.status = MinStatus::timeout;
            return result;
        }
    }
    result.status = MinStatus::bound_exceeded;
    return result;
}

MinResult brute_force_min(const DfaSample& sample, std::size_t m_max) {
    const std::size_t k = sample.alphabet().size();
    if (m_max == 0 || m_max > 3 || k > 2) {
        throw DomainError("brute force is limited to at most 3 states over at most 2 symbols");
    }
    MinResult result;
    auto words = sample.entries();
    for (std::size_t m = 1; m <= m_max; ++m) {
        const std::size_t cells = m * k;
        std::size_t tables = 1;
        for (std::size_t i = 0; i < cells; ++i) tables *= m;
        std::vector<StateId> table(cells);
        for (std::size_t code = 0; code < tables; ++code) {
            std::size_t rest = code;
            for (std::size_t i = 0; i < cells; ++i) {
                table[i] = static_cast<StateId>(rest % m);
                rest /= m;
            }
            for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
                for (StateId init = 0; init < m; ++init) {
                    ++result.states_explored;
                    bool ok = true;
                    for (const auto& ls : words) {
                        StateId q = init;
                        for (Symbol a : ls.symbols) q = table[q * k + a];
                        if ((((mask >> q) & 1U) != 0) != ls.label) {
                            ok = false;
                            break;
                        }
                    }
                    if (!ok) continue;
                    PartialDfa w(sample.alphabet(), m, init);
                    for (StateId q = 0; q < m; ++q) {
                        w.set_accepting(q, ((mask >> q) & 1U) != 0);
                        for (Symbol a = 0; a < k; ++a) w.set_transition(q, a, table[q * k + a]);
                    }
                    result.status = MinStatus::found;
                    result.m_star = m;
                    result.witness = std::move(w);
                    return result;
                }
            }
        }
    }
    result.status = MinStatus::bound_exceeded;
    return result;
}

Dfa rpni(const DfaSample& sample) {
    Quotient q(sample);
    RedBlue rb(q);
    while (auto blue = rb.pick_blue()) {
        bool merged = false;
        for (StateId r : rb.reds()) {
            std::size_t mark = q.mark();
            if (q.merge(r, *blue)) {
                q.commit();
                merged = true;
                break;
            }
            q.undo(mark);
        }
        if (!merged) rb.promote(*blue);
    }
    Dfa out = complete(q.extract(rb.reds(), sample.alphabet()));
    if (!is_consistent(out, sample)) throw std::logic_error("rpni produced an inconsistent DFA");
    return out;
}

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::sat: return "sat";
        case SolveStatus::unsat: return "unsat";
        case SolveStatus::timeout: return "timeout";
    }
    return "unsat";
}

}  // namespace pcdfa
