#include "gapmatch/automata.hpp"

#include <stdexcept>
#include <string>

namespace gapmatch {

Dfa::Dfa(std::uint32_t state_count, std::uint32_t sigma, State start,
         std::vector<State> accepting)
    : state_count_(state_count), sigma_(sigma), start_(start),
      accepting_(state_count, false),
      delta_(static_cast<std::size_t>(state_count) * sigma, kUndefined) {
    if (state_count_ == 0) throw std::invalid_argument("Dfa: needs at least one state");
    if (start_ >= state_count_) throw std::invalid_argument("Dfa: start state out of range");
    for (State q : accepting) {
        if (q >= state_count_) throw std::invalid_argument("Dfa: accepting state out of range");
        accepting_[q] = true;
    }
}

void Dfa::add_transition(State from, Symbol symbol, State to) {
    if (from >= state_count_ || to >= state_count_)
        throw std::invalid_argument("Dfa: transition references an unknown state");
    if (symbol >= sigma_)
        throw std::invalid_argument("Dfa: transition symbol out of alphabet range");
    delta_[from * sigma_ + symbol] = to;
}

bool dfa_accepts(const Dfa& a, std::span<const Symbol> word) {
    Dfa::State q = a.start();
    for (Symbol s : word) {
        if (s >= a.sigma())
            throw std::invalid_argument("dfa_accepts: symbol " + std::to_string(s) +
                                        " outside alphabet of size " + std::to_string(a.sigma()));
        q = a.step(q, s);
        if (q == Dfa::kUndefined) return false;
    }
    return a.is_accepting(q);
}

bool dfa_accepts(const Dfa& a, const Word& word) {
    return dfa_accepts(a, word.symbols());
}

FactorTable::FactorTable(std::size_t n, bool epsilon_accepted)
    : n_(n), epsilon_(epsilon_accepted), bits_(n * n, false) {}

FactorTable build_factor_table(const Dfa& a, const Word& w) {
    if (w.empty()) throw std::invalid_argument("build_factor_table: empty text");
    const std::size_t n = w.size();
    FactorTable table(n, a.is_accepting(a.start()));
    for (Pos i = 1; i <= n; ++i) {
        Dfa::State q = a.start();
        for (Pos j = i; j <= n; ++j) {
            const Symbol s = w[j - 1];
            if (s >= a.sigma()) {
                q = Dfa::kUndefined; // symbol unknown to this DFA: rejects from here on
            } else {
                q = a.step(q, s);
            }
            if (q == Dfa::kUndefined) break;
            if (a.is_accepting(q)) table.set(i, j);
        }
    }
    return table;
}

bool factor_query(const FactorTable& t, Pos i, Pos j) {
    if (j + 1 == i) return t.epsilon_accepted();
    if (i < 1 || j < i || j > t.text_length())
        throw std::invalid_argument("factor_query: bad factor bounds [" + std::to_string(i) +
                                    ", " + std::to_string(j) + "]");
    return t.get(i, j);
}

} // namespace gapmatch
