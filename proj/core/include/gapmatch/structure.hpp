#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gapmatch/core.hpp"

namespace gapmatch {

/// interval(C) = [a, b-1] for a constraint (a, b, L). Since b is excluded,
/// constraints (a, b, .) and (b, b', .) have disjoint intervals.
struct Interval {
    Pos lo;
    Pos hi;

    bool operator==(const Interval&) const = default;
};

Interval interval_of(Pos i, Pos j);
Interval interval_of(const GapConstraint& c);

enum class IntervalRelation {
    Equal,
    Contains,    // interval(C) strictly contains interval(C')
    ContainedIn, // interval(C) strictly contained in interval(C')
    Intersects,  // overlapping, neither contains the other
    Disjoint,
};

IntervalRelation relation(const Interval& a, const Interval& b);
IntervalRelation relation(const GapConstraint& c, const GapConstraint& d);

/// True iff no pair of constraints classifies as Intersects. O(K^2) pairwise
/// check; when offending is non-null and the answer is false, it receives
/// the indices of one intersecting pair.
bool is_non_intersecting(const ConstraintSet& cs,
                         std::pair<std::size_t, std::size_t>* offending = nullptr);

/// The graph on pattern positions [m]: one edge per constraint, plus the
/// consecutive edges (i, i+1) and the spanning edge (1, m). Edges carry
/// either a real constraint index or a trivial label.
class ConstraintGraph {
public:
    enum class Label {
        Constraint,         // a member of the constraint set
        TrivialConsecutive, // (i, i+1, Sigma^*)
        TrivialSpan,        // (1, m, { w : |w| >= m-2 })
    };

    struct Edge {
        Pos u; // u < v as pattern positions
        Pos v;
        Label label;
        std::size_t constraint = 0; // index into the set when label == Constraint
    };

    ConstraintGraph(Pos m, std::vector<Edge> edges);

    Pos vertex_count() const { return m_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::vector<Pos>>& adjacency() const { return adj_; }
    std::span<const std::size_t> incident_edges(Pos v) const { return incident_[v - 1]; }

private:
    Pos m_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Pos>> adj_;                 // 0-based vertex -> neighbours
    std::vector<std::vector<std::size_t>> incident_;    // 0-based vertex -> edge indices
};

/// Builds the constraint graph for a pattern of length m >= 2. Trivial
/// labels fill in only where no real constraint occupies the edge.
ConstraintGraph build_graph(Pos m, const ConstraintSet& cs);

/// Vertex separation number of one ordering: the maximum, over prefix
/// positions i, of how many vertices placed before position i still have a
/// neighbour at position >= i. Non-permutations throw std::invalid_argument.
int vsn_of_ordering(const ConstraintGraph& g, std::span<const Pos> ordering);

struct VsnReport {
    std::vector<Pos> ordering;
    int vsn = 0;
    bool optimal = false;
};

/// Exact minimum vertex separation number via dynamic programming over
/// vertex subsets, O(2^m * m); returns an achieving ordering. Graphs with
/// more than m_limit vertices throw TooLarge (callers then fall back to the
/// natural ordering with its computed vsn).
VsnReport min_vsn_ordering(const ConstraintGraph& g, int m_limit = 20);

/// Index (1-based into the set) of the constraint with endpoints (1, m), or
/// 0 when none exists and a synthetic root has to be added.
std::size_t root_of(const ConstraintSet& cs, Pos m);

/// Pre-order of a depth-first traversal of the containment tree:
/// a < a'  or  (a <= a' and b' < b). Total on non-intersecting sets; equal
/// (i, j) pairs throw std::invalid_argument.
bool preorder_lt(const GapConstraint& c, const GapConstraint& d);
bool preorder_lt(Pos a, Pos b, Pos a2, Pos b2);

/// The containment order of a non-intersecting constraint set as an ordered
/// rooted tree (its Hasse diagram). Node 0 is the root: the (1, m)
/// constraint when present, otherwise a synthetic constraint
/// (1, m, { w : m-2 <= |w| <= n }).
class ConstraintTree {
public:
    struct Node {
        Pos a;
        Pos b;
        std::optional<std::size_t> constraint; // index into the set; none = synthetic root
        std::vector<std::size_t> children;     // interval-ordered left to right
    };

    const Node& node(std::size_t k) const { return nodes_[k]; }
    const std::vector<Node>& nodes() const { return nodes_; }
    std::size_t node_count() const { return nodes_.size(); }
    bool has_synthetic_root() const { return !nodes_[0].constraint.has_value(); }
    const SemilinearSet& synthetic_root_language() const;

    int depth() const;

    friend ConstraintTree build_tree(const ConstraintSet& cs, Pos m, std::size_t n);

private:
    std::vector<Node> nodes_; // nodes_[0] is the root
    std::optional<SemilinearSet> root_language_;
};

/// Sorts the non-root constraints by preorder_lt, then replays the stack
/// construction: pop while the next constraint starts at or beyond the top's
/// right end, then attach it as the top's next child. Requires a
/// non-intersecting set (std::invalid_argument otherwise) and m >= 2;
/// n is the text length used for the synthetic root language.
ConstraintTree build_tree(const ConstraintSet& cs, Pos m, std::size_t n);

} // namespace gapmatch
