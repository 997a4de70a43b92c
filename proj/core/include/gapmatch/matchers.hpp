#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "gapmatch/boolmat.hpp"
#include "gapmatch/core.hpp"
#include "gapmatch/structure.hpp"

namespace gapmatch {

/// bound's "no such position" value. A value, not an error.
inline constexpr Pos kInfinity = std::numeric_limits<Pos>::max();

struct MatchOptions {
    std::uint64_t oracle_step_budget = 10'000'000;
    std::uint64_t nfa_state_budget = 1'000'000;
    int vsn_limit = 4;                         // dispatch routes to the DP up to this width
    int vsn_exact_m_limit = 20;                // exact ordering search cap
    std::size_t tuple_enum_max_constraints = 3;
};

/// Least j >= i such that p[s..t] embeds into w[i..j], or kInfinity. Greedy
/// left-to-right scan. Requires 1 <= s <= t <= |p| and 1 <= i <= |w|.
Pos bound(const Word& w, const Word& p, Pos i, Pos s, Pos t);

/// Unconstrained partial-embeddings matrix B^(s,t): entry (i, j) (1-based
/// positions stored 0-based) says p[s..t] embeds into w[i..j] pinned at both
/// ends. For s == t this degenerates to the symbol-filtered diagonal, since
/// a single pinned position forces i == j.
BoolMatrix build_B(const Word& w, const Word& p, Pos s, Pos t);

/// mask(C): entry (i, j) true iff i < j and the gap between text positions
/// i and j (length j - i - 1, content w[i+1 .. j-1]) belongs to C's language.
BoolMatrix mask(const GapConstraint& c, const Word& text);

/// The tree pipeline: partial-embeddings matrices A^(k) for every node of
/// the containment tree, computed bottom-up with one boolean matrix product
/// per join. Shares the per-instance constraint tables across nodes.
class TreeMatmul {
public:
    explicit TreeMatmul(const Instance& inst);

    const ConstraintTree& tree() const { return tree_; }

    /// A^(k) = P(a_k, b_k, constraints of the subtree rooted at k).
    /// Performs exactly 2 * |children(k)| multiplications per node visited.
    BoolMatrix compute_node(std::size_t k);

    std::uint64_t multiplications() const { return multiplications_; }

private:
    BoolMatrix node_mask(std::size_t k) const;

    const Instance& inst_;
    ConstraintTables tables_;
    ConstraintTree tree_;
    std::uint64_t multiplications_ = 0;
};

/// Tuple enumeration for semilinear constraint sets: every admissible
/// endpoint tuple (one (i', j') pair per constraint with gap length in the
/// set) is extended greedily to a full embedding. Produces a witness.
/// Regular constraints throw UnsupportedConstraint; more than
/// tuple_enum_max_constraints constraints throw TooLarge.
MatchResult match_tuple_enum(const Instance& inst, const MatchOptions& opts = {});

/// On-the-fly subset simulation of the product NFA: a macro-state holds the
/// pattern counter plus one tracker state per active constraint DFA.
/// Semilinear constraints are compiled into counting DFAs with at most n+2
/// states. Exceeding nfa_state_budget throws BudgetExhausted. Decision only.
MatchResult match_nfa_product(const Instance& inst, const MatchOptions& opts = {});

/// Boundary dynamic programming over a vertex ordering of the constraint
/// graph (all trivial edges included). Works for any constraint mix; cost
/// grows with the ordering's vertex separation number. Produces a witness
/// via back-pointers. When no ordering is supplied, the exact minimiser is
/// used up to vsn_exact_m_limit vertices, then the natural ordering.
MatchResult match_vsn_dp(const Instance& inst, const MatchOptions& opts = {},
                         std::optional<std::vector<Pos>> ordering = std::nullopt);

/// The containment-tree matrix pipeline for non-intersecting constraint
/// sets: A^(root) via 2 * (#non-root nodes) boolean matrix products, then an
/// any-entry scan. Intersecting sets throw UnsupportedStructure. Decision
/// only.
MatchResult match_tree_matmul(const Instance& inst, const MatchOptions& opts = {});

/// Portfolio front door: tree-matmul for non-intersecting sets, else the
/// boundary DP when the (exact or natural) ordering width is within
/// vsn_limit, else the NFA product when every constraint is regular and the
/// product estimate fits the state budget, else tuple enumeration when every
/// constraint is semilinear and the set is small, else the backtracking
/// oracle. Records the routing reason in stats.note.
MatchResult dispatch(const Instance& inst, const MatchOptions& opts = {});

} // namespace gapmatch
