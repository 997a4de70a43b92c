#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gapmatch/types.hpp"

namespace gapmatch {

/// Deterministic finite automaton over the dense alphabet [sigma].
/// Transitions may be left undefined (incomplete DFA); a run that hits an
/// undefined transition rejects.
class Dfa {
public:
    using State = std::uint32_t;
    static constexpr State kUndefined = static_cast<State>(-1);

    Dfa(std::uint32_t state_count, std::uint32_t sigma, State start,
        std::vector<State> accepting);

    void add_transition(State from, Symbol symbol, State to);

    std::uint32_t state_count() const { return state_count_; }
    std::uint32_t sigma() const { return sigma_; }
    State start() const { return start_; }
    bool is_accepting(State q) const { return accepting_[q]; }

    /// kUndefined when the transition is missing.
    State step(State q, Symbol symbol) const { return delta_[q * sigma_ + symbol]; }

    /// size(A) = states * sigma, the accounting used by the dispatcher's
    /// cost model.
    std::size_t size() const { return static_cast<std::size_t>(state_count_) * sigma_; }

    bool operator==(const Dfa&) const = default;

private:
    std::uint32_t state_count_;
    std::uint32_t sigma_;
    State start_;
    std::vector<bool> accepting_;
    std::vector<State> delta_; // state * sigma + symbol, kUndefined = missing
};

/// True iff the run from the start state over word stays defined and ends
/// accepting. Out-of-range symbols throw std::invalid_argument.
bool dfa_accepts(const Dfa& a, std::span<const Symbol> word);
bool dfa_accepts(const Dfa& a, const Word& word);

/// Precomputed factor membership: answers "w[i..j] in L(A)?" in constant
/// time, with the empty factor handled by a separate flag.
class FactorTable {
public:
    FactorTable(std::size_t n, bool epsilon_accepted);

    std::size_t text_length() const { return n_; }
    bool epsilon_accepted() const { return epsilon_; }

    bool get(Pos i, Pos j) const { return bits_[(i - 1) * n_ + (j - 1)]; }
    void set(Pos i, Pos j) { bits_[(i - 1) * n_ + (j - 1)] = true; }

private:
    std::size_t n_;
    bool epsilon_;
    std::vector<bool> bits_;
};

/// Runs A over every suffix w[i..n], recording acceptance after each prefix:
/// O(n^2) state steps with O(1) dense-table transition lookups.
FactorTable build_factor_table(const Dfa& a, const Word& w);

/// Constant-time factor query. j == i-1 answers for the empty factor via the
/// epsilon flag; other out-of-range arguments throw std::invalid_argument.
bool factor_query(const FactorTable& t, Pos i, Pos j);

} // namespace gapmatch
