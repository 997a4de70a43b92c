#include "gapmatch/structure.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "gapmatch/errors.hpp"

namespace gapmatch {

Interval interval_of(Pos i, Pos j) {
    if (i >= j) throw std::invalid_argument("interval_of: requires i < j");
    return Interval{i, j - 1};
}

Interval interval_of(const GapConstraint& c) { return interval_of(c.i, c.j); }

IntervalRelation relation(const Interval& a, const Interval& b) {
    if (a == b) return IntervalRelation::Equal;
    if (a.lo <= b.lo && b.hi <= a.hi) return IntervalRelation::Contains;
    if (b.lo <= a.lo && a.hi <= b.hi) return IntervalRelation::ContainedIn;
    if (a.hi < b.lo || b.hi < a.lo) return IntervalRelation::Disjoint;
    return IntervalRelation::Intersects;
}

IntervalRelation relation(const GapConstraint& c, const GapConstraint& d) {
    return relation(interval_of(c), interval_of(d));
}

bool is_non_intersecting(const ConstraintSet& cs,
                         std::pair<std::size_t, std::size_t>* offending) {
    const auto& v = cs.constraints();
    for (std::size_t a = 0; a < v.size(); ++a) {
        for (std::size_t b = a + 1; b < v.size(); ++b) {
            if (relation(v[a], v[b]) == IntervalRelation::Intersects) {
                if (offending) *offending = {a, b};
                return false;
            }
        }
    }
    return true;
}

ConstraintGraph::ConstraintGraph(Pos m, std::vector<Edge> edges)
    : m_(m), edges_(std::move(edges)), adj_(m), incident_(m) {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& ed = edges_[e];
        adj_[ed.u - 1].push_back(ed.v);
        adj_[ed.v - 1].push_back(ed.u);
        incident_[ed.u - 1].push_back(e);
        incident_[ed.v - 1].push_back(e);
    }
}

ConstraintGraph build_graph(Pos m, const ConstraintSet& cs) {
    if (m < 2) throw std::invalid_argument("build_graph: requires m >= 2");
    std::vector<ConstraintGraph::Edge> edges;
    std::vector<std::vector<bool>> present(m + 1, std::vector<bool>(m + 1, false));
    const auto& v = cs.constraints();
    for (std::size_t c = 0; c < v.size(); ++c) {
        if (v[c].j > m) throw std::invalid_argument("build_graph: constraint beyond pattern");
        edges.push_back({v[c].i, v[c].j, ConstraintGraph::Label::Constraint, c});
        present[v[c].i][v[c].j] = true;
    }
    for (Pos i = 1; i + 1 <= m; ++i)
        if (!present[i][i + 1]) {
            edges.push_back({i, i + 1, ConstraintGraph::Label::TrivialConsecutive, 0});
            present[i][i + 1] = true;
        }
    if (!present[1][m])
        edges.push_back({1, m, ConstraintGraph::Label::TrivialSpan, 0});
    return ConstraintGraph(m, std::move(edges));
}

int vsn_of_ordering(const ConstraintGraph& g, std::span<const Pos> ordering) {
    const Pos m = g.vertex_count();
    if (ordering.size() != m) throw std::invalid_argument("vsn_of_ordering: wrong length");
    std::vector<int> rank(m + 1, -1); // vertex -> 0-based position
    for (std::size_t idx = 0; idx < ordering.size(); ++idx) {
        const Pos v = ordering[idx];
        if (v < 1 || v > m || rank[v] != -1)
            throw std::invalid_argument("vsn_of_ordering: not a permutation of [m]");
        rank[v] = static_cast<int>(idx);
    }
    int worst = 0;
    for (int i = 0; i < static_cast<int>(m); ++i) {
        int active = 0;
        for (int l = 0; l < i; ++l) {
            const Pos u = ordering[l];
            for (Pos nb : g.adjacency()[u - 1]) {
                if (rank[nb] >= i) { ++active; break; }
            }
        }
        worst = std::max(worst, active);
    }
    return worst;
}

VsnReport min_vsn_ordering(const ConstraintGraph& g, int m_limit) {
    const int m = static_cast<int>(g.vertex_count());
    if (m_limit > 25) m_limit = 25;
    if (m > m_limit)
        throw TooLarge("min_vsn_ordering: " + std::to_string(m) + " vertices exceeds limit " +
                       std::to_string(m_limit));

    std::vector<std::uint32_t> adj(m, 0);
    for (const auto& e : g.edges()) {
        adj[e.u - 1] |= std::uint32_t{1} << (e.v - 1);
        adj[e.v - 1] |= std::uint32_t{1} << (e.u - 1);
    }

    const std::size_t total = std::size_t{1} << m;
    const std::uint32_t all = static_cast<std::uint32_t>(total - 1);

    // boundary[S] = |{ u in S : u has a neighbour outside S }|
    std::vector<std::uint8_t> boundary(total, 0);
    for (std::size_t s = 1; s < total; ++s) {
        std::uint8_t b = 0;
        std::uint32_t members = static_cast<std::uint32_t>(s);
        while (members) {
            const int u = std::countr_zero(members);
            members &= members - 1;
            if (adj[u] & ~static_cast<std::uint32_t>(s) & all) ++b;
        }
        boundary[s] = b;
    }

    // best[S]: minimum over orderings of S as a prefix of the maximum
    // boundary seen before each placement.
    std::vector<std::uint8_t> best(total, 0xff);
    std::vector<std::uint8_t> last(total, 0xff);
    best[0] = 0;
    for (std::size_t s = 1; s < total; ++s) {
        std::uint32_t members = static_cast<std::uint32_t>(s);
        while (members) {
            const int v = std::countr_zero(members);
            members &= members - 1;
            const std::size_t prev = s & ~(std::size_t{1} << v);
            const std::uint8_t cost = std::max(best[prev], boundary[prev]);
            if (cost < best[s]) {
                best[s] = cost;
                last[s] = static_cast<std::uint8_t>(v);
            }
        }
    }

    VsnReport report;
    report.vsn = best[total - 1];
    report.optimal = true;
    report.ordering.resize(m);
    std::size_t s = total - 1;
    for (int idx = m - 1; idx >= 0; --idx) {
        const int v = last[s];
        report.ordering[idx] = static_cast<Pos>(v + 1);
        s &= ~(std::size_t{1} << v);
    }
    return report;
}

std::size_t root_of(const ConstraintSet& cs, Pos m) {
    const auto& v = cs.constraints();
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k].i == 1 && v[k].j == m) return k + 1;
    return 0;
}

bool preorder_lt(Pos a, Pos b, Pos a2, Pos b2) {
    if (a == a2 && b == b2)
        throw std::invalid_argument("preorder_lt: equal (i, j) pairs are not ordered");
    return a < a2 || (a <= a2 && b2 < b);
}

bool preorder_lt(const GapConstraint& c, const GapConstraint& d) {
    return preorder_lt(c.i, c.j, d.i, d.j);
}

const SemilinearSet& ConstraintTree::synthetic_root_language() const {
    if (!root_language_)
        throw std::logic_error("ConstraintTree: root is a real constraint");
    return *root_language_;
}

int ConstraintTree::depth() const {
    // Iterative DFS; trees are shallow but patterns can be long.
    int deepest = 0;
    std::vector<std::pair<std::size_t, int>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [k, d] = stack.back();
        stack.pop_back();
        deepest = std::max(deepest, d);
        for (std::size_t c : nodes_[k].children) stack.push_back({c, d + 1});
    }
    return deepest;
}

ConstraintTree build_tree(const ConstraintSet& cs, Pos m, std::size_t n) {
    if (m < 2) throw std::invalid_argument("build_tree: requires m >= 2");
    std::pair<std::size_t, std::size_t> offending;
    if (!is_non_intersecting(cs, &offending))
        throw std::invalid_argument("build_tree: constraints " + std::to_string(offending.first) +
                                    " and " + std::to_string(offending.second) + " intersect");

    ConstraintTree tree;
    const std::size_t r = root_of(cs, m);
    if (r == 0) {
        tree.root_language_ = SemilinearSet::bounded_range(m >= 2 ? m - 2 : 0, n);
        tree.nodes_.push_back({1, m, std::nullopt, {}});
    } else {
        tree.nodes_.push_back({1, m, r - 1, {}});
    }

    const auto& v = cs.constraints();
    std::vector<std::size_t> order;
    order.reserve(v.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        if (k + 1 != r) order.push_back(k);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return preorder_lt(v[x], v[y]);
    });

    // Stack of tree-node ids along the path from the root to the current node.
    std::vector<std::size_t> stack{0};
    for (std::size_t k : order) {
        while (!(v[k].i < tree.nodes_[stack.back()].b)) stack.pop_back();
        const std::size_t parent = stack.back();
        const std::size_t id = tree.nodes_.size();
        tree.nodes_.push_back({v[k].i, v[k].j, k, {}});
        tree.nodes_[parent].children.push_back(id);
        stack.push_back(id);
    }
    return tree;
}

} // namespace gapmatch
