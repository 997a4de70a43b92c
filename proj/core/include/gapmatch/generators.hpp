#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gapmatch/core.hpp"

namespace gapmatch {

/// Undirected graph given by its adjacency matrix, with every vertex carrying
/// a self-loop (the diagonal is forced to 1).
class SourceGraph {
public:
    explicit SourceGraph(std::size_t vertex_count);

    std::size_t vertex_count() const { return n_; }
    bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * n_ + v]; }
    void add_edge(std::size_t u, std::size_t v);

    bool operator==(const SourceGraph&) const = default;

private:
    std::size_t n_;
    std::vector<bool> adj_;
};

/// Monotone exact-1-in-3 satisfiability: clauses are sorted triples of
/// distinct variable indices in [1, variables].
struct CnfExact1 {
    std::size_t variables = 0;
    std::vector<std::array<std::uint32_t, 3>> clauses;
};

/// Three equal-sized sets of d-dimensional boolean vectors.
struct OvTriple {
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<std::vector<bool>> a, b, c; // each n vectors of dimension d
};

/// Clique -> matching instance: p = 0 1^(k^2) 0 over the flattened adjacency
/// matrix, with anchor, diagonal, column-synchronisation and row-window
/// constraints. The direct variant uses the row language {0} u [n-1].
Instance gen_clique(const SourceGraph& g, std::size_t k);

/// The d-variant of the clique reduction: every non-constant row constraint
/// is replaced by the singleton L(d). The original instance is positive iff
/// some d in {0} u [n-1] yields a positive d-variant.
Instance gen_clique_turing(const SourceGraph& g, std::size_t k, std::size_t d);

/// Exact-1-in-3-SAT -> matching instance with one regular constraint per
/// (variable, clause) incidence; every constraint DFA has at most 8 states.
Instance gen_sat(const CnfExact1& f);

/// 3-orthogonal-vectors -> matching instance over {0, 1, #, @, $, |} whose
/// constraint set is always non-intersecting.
Instance gen_ov3(const OvTriple& t);

/// Exhaustive source-problem solvers for cross-validation. Inputs over the
/// size guard (10 vertices / variables, 6 OV vectors) throw TooLarge.
bool brute_clique(const SourceGraph& g, std::size_t k);
bool brute_1in3(const CnfExact1& f);
bool brute_ov3(const OvTriple& t);

/// Deterministic random sources for tests and benchmarks.
SourceGraph random_graph(std::size_t n, double edge_probability, std::uint64_t seed);
CnfExact1 random_cnf(std::size_t variables, std::size_t clauses, std::uint64_t seed);
OvTriple random_ov(std::size_t n, std::size_t d, std::uint64_t seed);

} // namespace gapmatch
