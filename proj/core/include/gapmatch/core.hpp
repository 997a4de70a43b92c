#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gapmatch/automata.hpp"
#include "gapmatch/semilinear.hpp"
#include "gapmatch/types.hpp"

namespace gapmatch {

/// A gap-constraint language: either a semilinear length restriction or a
/// regular restriction on the gap's content.
using ConstraintLanguage = std::variant<SemilinearSet, Dfa>;

/// A gap constraint (i, j, L): for an embedding e, the text factor strictly
/// between e(i) and e(j) must belong to L. Requires 1 <= i < j.
struct GapConstraint {
    Pos i;
    Pos j;
    ConstraintLanguage language;

    bool is_semilinear() const { return std::holds_alternative<SemilinearSet>(language); }
    bool is_regular() const { return std::holds_alternative<Dfa>(language); }
    const SemilinearSet& semilinear() const { return std::get<SemilinearSet>(language); }
    const Dfa& dfa() const { return std::get<Dfa>(language); }

    /// size(C): number of defining integers for semilinear constraints,
    /// states * sigma for regular ones.
    std::size_t size() const;

    bool operator==(const GapConstraint&) const = default;
};

/// A set of gap constraints: at most one constraint per (i, j) pair, each
/// with 1 <= i < j. Semilinear and regular members may be mixed freely.
class ConstraintSet {
public:
    ConstraintSet() = default;
    explicit ConstraintSet(std::vector<GapConstraint> constraints);

    const std::vector<GapConstraint>& constraints() const { return constraints_; }
    const GapConstraint& operator[](std::size_t idx) const { return constraints_[idx]; }
    std::size_t count() const { return constraints_.size(); }
    bool empty() const { return constraints_.empty(); }

    /// max size(C) over members; 0 for the empty set.
    std::size_t gapsize() const;
    /// sum of size(C) over members.
    std::size_t total_size() const;

    bool operator==(const ConstraintSet&) const = default;

private:
    std::vector<GapConstraint> constraints_;
};

/// One matching problem: does the pattern embed into the text as a
/// subsequence satisfying every constraint?
class Instance {
public:
    Instance(Word text, Word pattern, ConstraintSet constraints, Alphabet alphabet);

    const Word& text() const { return text_; }
    const Word& pattern() const { return pattern_; }
    const ConstraintSet& constraints() const { return constraints_; }
    const Alphabet& alphabet() const { return alphabet_; }

    std::size_t n() const { return text_.size(); }
    std::size_t m() const { return pattern_.size(); }

private:
    Word text_;
    Word pattern_;
    ConstraintSet constraints_;
    Alphabet alphabet_;
};

enum class MatchAlgorithm {
    Oracle,
    TupleEnum,
    NfaProduct,
    VsnDp,
    TreeMatmul,
};

std::string to_string(MatchAlgorithm a);

struct MatchStats {
    std::uint64_t steps = 0;           // oracle position trials
    std::uint64_t states = 0;          // macro-states / DP tuples created
    std::uint64_t multiplications = 0; // boolean matrix products
    double millis = 0.0;
    std::string note;                  // e.g. the dispatcher's routing reason
};

struct MatchResult {
    bool matched = false;
    std::optional<Embedding> witness;
    MatchAlgorithm algorithm = MatchAlgorithm::Oracle;
    MatchStats stats;
};

/// The (i, j)-gap of e in text: the factor text[e(i)+1 .. e(j)-1]. Empty when
/// e(j) = e(i) + 1. Requires 1 <= i < j <= |e|; violations throw
/// std::invalid_argument.
Word gap(const Word& text, const Embedding& e, Pos i, Pos j);

/// True iff e has length m, is strictly increasing within the text, maps
/// every pattern position onto an equal symbol, and every constraint's gap
/// belongs to its language. Malformed embeddings yield false, not errors.
bool check_embedding(const Instance& inst, const Embedding& e);

/// Shared per-instance preprocessing: a membership table over [0, n] per
/// semilinear constraint and a factor table per distinct DFA (structurally
/// equal DFAs share one table). Every matcher builds this once and queries
/// gaps in constant time.
class ConstraintTables {
public:
    explicit ConstraintTables(const Instance& inst);

    /// Gap admissibility for constraint index c when the endpoints embed at
    /// text positions x < y (gap = text[x+1 .. y-1]).
    bool gap_allowed(std::size_t c, Pos x, Pos y) const;

    /// Length membership for semilinear constraint index c.
    bool length_allowed(std::size_t c, std::size_t len) const;

    const Instance& instance() const { return inst_; }

private:
    const Instance& inst_;
    // parallel to the constraint list: exactly one of the two per entry
    std::vector<std::optional<MembershipTable>> length_tables_;
    std::vector<std::shared_ptr<const FactorTable>> factor_tables_;
};

/// Exhaustive depth-first backtracking over candidate positions, checking
/// each constraint as soon as both endpoints are placed. Ground truth for
/// every other matcher. When it matches, the witness is the
/// lexicographically smallest satisfying embedding (by target sequence).
/// Exceeding step_budget throws BudgetExhausted, which is distinct from a
/// negative answer.
MatchResult oracle_match(const Instance& inst, std::uint64_t step_budget = 10'000'000);

} // namespace gapmatch
