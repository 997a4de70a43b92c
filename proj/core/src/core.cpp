#include "gapmatch/core.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "gapmatch/errors.hpp"

namespace gapmatch {

std::size_t GapConstraint::size() const {
    if (is_semilinear()) return semilinear().size();
    return dfa().size();
}

ConstraintSet::ConstraintSet(std::vector<GapConstraint> constraints)
    : constraints_(std::move(constraints)) {
    std::set<std::pair<Pos, Pos>> pairs;
    for (const auto& c : constraints_) {
        if (c.i < 1 || c.i >= c.j)
            throw std::invalid_argument("ConstraintSet: constraint requires 1 <= i < j, got (" +
                                        std::to_string(c.i) + ", " + std::to_string(c.j) + ")");
        if (!pairs.emplace(c.i, c.j).second)
            throw std::invalid_argument("ConstraintSet: duplicate (" + std::to_string(c.i) + ", " +
                                        std::to_string(c.j) + ")-gap-constraint");
    }
}

std::size_t ConstraintSet::gapsize() const {
    std::size_t g = 0;
    for (const auto& c : constraints_) g = std::max(g, c.size());
    return g;
}

std::size_t ConstraintSet::total_size() const {
    std::size_t t = 0;
    for (const auto& c : constraints_) t += c.size();
    return t;
}

Instance::Instance(Word text, Word pattern, ConstraintSet constraints, Alphabet alphabet)
    : text_(std::move(text)), pattern_(std::move(pattern)),
      constraints_(std::move(constraints)), alphabet_(std::move(alphabet)) {
    if (pattern_.empty()) throw std::invalid_argument("Instance: pattern must be non-empty");
    if (text_.size() < pattern_.size())
        throw std::invalid_argument("Instance: text shorter than pattern");
    const std::size_t sigma = alphabet_.size();
    for (Symbol s : text_.symbols())
        if (s >= sigma) throw std::invalid_argument("Instance: text symbol outside alphabet");
    for (Symbol s : pattern_.symbols())
        if (s >= sigma) throw std::invalid_argument("Instance: pattern symbol outside alphabet");
    for (const auto& c : constraints_.constraints()) {
        if (c.j > pattern_.size())
            throw std::invalid_argument("Instance: constraint (" + std::to_string(c.i) + ", " +
                                        std::to_string(c.j) + ") exceeds pattern length " +
                                        std::to_string(pattern_.size()));
        if (c.is_regular() && c.dfa().sigma() < sigma)
            throw std::invalid_argument("Instance: constraint DFA covers a smaller alphabet "
                                        "than the instance");
    }
}

std::string to_string(MatchAlgorithm a) {
    switch (a) {
        case MatchAlgorithm::Oracle: return "oracle";
        case MatchAlgorithm::TupleEnum: return "tuple-enum";
        case MatchAlgorithm::NfaProduct: return "nfa-product";
        case MatchAlgorithm::VsnDp: return "vsn-dp";
        case MatchAlgorithm::TreeMatmul: return "tree-matmul";
    }
    return "unknown";
}

Word gap(const Word& text, const Embedding& e, Pos i, Pos j) {
    if (i < 1 || i >= j || j > e.size())
        throw std::invalid_argument("gap: requires 1 <= i < j <= |e|");
    const Pos x = e.at(i);
    const Pos y = e.at(j);
    if (x >= y || y > text.size())
        throw std::invalid_argument("gap: embedding targets out of order or range");
    return text.slice(x + 1, y - 1);
}

namespace {

bool language_accepts_gap(const ConstraintLanguage& lang, const Word& g) {
    if (std::holds_alternative<SemilinearSet>(lang))
        return contains(std::get<SemilinearSet>(lang), g.size());
    return dfa_accepts(std::get<Dfa>(lang), g);
}

} // namespace

bool check_embedding(const Instance& inst, const Embedding& e) {
    const Word& w = inst.text();
    const Word& p = inst.pattern();
    if (e.size() != p.size()) return false;
    if (!e.well_formed(w.size())) return false;
    for (Pos t = 1; t <= p.size(); ++t)
        if (w.at(e.at(t)) != p.at(t)) return false;
    for (const auto& c : inst.constraints().constraints())
        if (!language_accepts_gap(c.language, gap(w, e, c.i, c.j))) return false;
    return true;
}

ConstraintTables::ConstraintTables(const Instance& inst) : inst_(inst) {
    const std::size_t n = inst.n();
    const auto& cs = inst.constraints().constraints();
    length_tables_.resize(cs.size());
    factor_tables_.resize(cs.size());
    for (std::size_t c = 0; c < cs.size(); ++c) {
        if (cs[c].is_semilinear()) {
            length_tables_[c] = build_table(cs[c].semilinear(), n);
        } else {
            // Structurally equal DFAs share one factor table.
            for (std::size_t prev = 0; prev < c; ++prev) {
                if (factor_tables_[prev] && cs[prev].dfa() == cs[c].dfa()) {
                    factor_tables_[c] = factor_tables_[prev];
                    break;
                }
            }
            if (!factor_tables_[c])
                factor_tables_[c] = std::make_shared<const FactorTable>(
                    build_factor_table(cs[c].dfa(), inst.text()));
        }
    }
}

bool ConstraintTables::gap_allowed(std::size_t c, Pos x, Pos y) const {
    if (length_tables_[c]) return length_tables_[c]->query_unchecked(y - x - 1);
    return factor_query(*factor_tables_[c], x + 1, y - 1);
}

bool ConstraintTables::length_allowed(std::size_t c, std::size_t len) const {
    return length_tables_[c]->query_unchecked(len);
}

MatchResult oracle_match(const Instance& inst, std::uint64_t step_budget) {
    const auto start_time = std::chrono::steady_clock::now();
    const Word& w = inst.text();
    const Word& p = inst.pattern();
    const std::size_t n = w.size();
    const std::size_t m = p.size();
    const ConstraintTables tables(inst);

    // Constraints grouped by their later endpoint, so each is checked as
    // soon as both images are placed.
    std::vector<std::vector<std::size_t>> ending_at(m + 1);
    const auto& cs = inst.constraints().constraints();
    for (std::size_t c = 0; c < cs.size(); ++c) ending_at[cs[c].j].push_back(c);

    MatchResult result;
    result.algorithm = MatchAlgorithm::Oracle;
    std::vector<Pos> chosen(m, 0);
    std::uint64_t steps = 0;

    // Candidate positions tried in increasing order at every depth, so the
    // first complete embedding is the lexicographically smallest one.
    auto dfs = [&](auto&& self, Pos t, Pos from) -> bool {
        if (t > m) return true;
        for (Pos pos = from; pos + (m - t) <= n; ++pos) {
            if (++steps > step_budget)
                throw BudgetExhausted("oracle_match: step budget of " +
                                      std::to_string(step_budget) + " exhausted");
            if (w.at(pos) != p.at(t)) continue;
            chosen[t - 1] = pos;
            bool ok = true;
            for (std::size_t c : ending_at[t]) {
                if (!tables.gap_allowed(c, chosen[cs[c].i - 1], pos)) { ok = false; break; }
            }
            if (ok && self(self, t + 1, pos + 1)) return true;
        }
        return false;
    };

    result.matched = dfs(dfs, 1, 1);
    result.stats.steps = steps;
    if (result.matched) result.witness = Embedding{chosen};
    result.stats.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_time)
            .count();
    return result;
}

} // namespace gapmatch
