#include "gapmatch/matchers.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "gapmatch/errors.hpp"

namespace gapmatch {

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double millis() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::uint64_t mix_hash(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

} // namespace

Pos bound(const Word& w, const Word& p, Pos i, Pos s, Pos t) {
    if (s < 1 || s > t || t > p.size() || i < 1 || i > w.size())
        throw std::invalid_argument("bound: positions out of range");
    Pos j = i - 1;
    for (Pos u = s; u <= t; ++u) {
        const Symbol target = p.at(u);
        do {
            ++j;
            if (j > w.size()) return kInfinity;
        } while (w.at(j) != target);
    }
    return j;
}

BoolMatrix build_B(const Word& w, const Word& p, Pos s, Pos t) {
    if (s < 1 || s > t || t > p.size())
        throw std::invalid_argument("build_B: requires 1 <= s <= t <= |p|");
    const std::size_t n = w.size();
    BoolMatrix b(n);

    if (s == t) {
        const Symbol target = p.at(s);
        for (std::size_t i = 0; i < n; ++i)
            if (w[i] == target) b.set(i, i);
        return b;
    }

    // bounds[i-1] = bound_i(s, t) for every start, built layer by layer with
    // one next-occurrence sweep per pattern position.
    std::vector<Pos> bounds(n);
    std::vector<Pos> next(n + 2);
    auto next_occurrence_of = [&](Symbol sym) {
        next[n + 1] = kInfinity;
        for (std::size_t pos = n; pos >= 1; --pos)
            next[pos] = (w[pos - 1] == sym) ? static_cast<Pos>(pos) : next[pos + 1];
    };

    next_occurrence_of(p.at(s));
    for (std::size_t i = 0; i < n; ++i) bounds[i] = next[i + 1];
    for (Pos u = s + 1; u <= t; ++u) {
        next_occurrence_of(p.at(u));
        for (std::size_t i = 0; i < n; ++i) {
            const Pos prev = bounds[i];
            bounds[i] = (prev == kInfinity) ? kInfinity : next[prev + 1];
        }
    }

    // Row i: (w[i] = p[s]) and j >= bound and (w[j] = p[t]), word-parallel.
    const Symbol last = p.at(t);
    std::vector<std::uint64_t> last_row(b.words_per_row(), 0);
    for (std::size_t j = 0; j < n; ++j)
        if (w[j] == last) last_row[j >> 6] |= std::uint64_t{1} << (j & 63);
    const Symbol first = p.at(s);
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i] != first || bounds[i] == kInfinity) continue;
        const std::size_t from = bounds[i] - 1; // 0-based first admissible column
        std::uint64_t* row = b.row(i);
        const std::size_t w0 = from >> 6;
        for (std::size_t v = w0; v < b.words_per_row(); ++v) row[v] = last_row[v];
        row[w0] &= ~std::uint64_t{0} << (from & 63);
    }
    return b;
}

namespace {

BoolMatrix mask_from(std::size_t n, const std::function<bool(Pos, Pos)>& gap_ok) {
    BoolMatrix m(n);
    for (Pos i = 1; i <= n; ++i)
        for (Pos j = i + 1; j <= n; ++j)
            if (gap_ok(i, j)) m.set(i - 1, j - 1);
    return m;
}

BoolMatrix semilinear_mask(std::size_t n, const MembershipTable& lengths) {
    BoolMatrix m(n);
    // Entry depends only on j - i - 1; fill by diagonals.
    for (std::size_t len = 0; len + 2 <= n + 1; ++len) {
        if (!lengths.query_unchecked(len)) continue;
        for (Pos i = 1; i + len + 1 <= n; ++i) m.set(i - 1, i + len);
    }
    return m;
}

} // namespace

BoolMatrix mask(const GapConstraint& c, const Word& text) {
    const std::size_t n = text.size();
    if (c.is_semilinear()) {
        return semilinear_mask(n, build_table(c.semilinear(), n));
    }
    const FactorTable table = build_factor_table(c.dfa(), text);
    return mask_from(n, [&](Pos i, Pos j) { return factor_query(table, i + 1, j - 1); });
}

TreeMatmul::TreeMatmul(const Instance& inst)
    : inst_(inst), tables_(inst),
      tree_(build_tree(inst.constraints(), static_cast<Pos>(inst.m()), inst.n())) {}

BoolMatrix TreeMatmul::node_mask(std::size_t k) const {
    const std::size_t n = inst_.n();
    const auto& node = tree_.node(k);
    if (node.constraint) {
        const std::size_t c = *node.constraint;
        const auto& gc = inst_.constraints()[c];
        if (gc.is_semilinear()) {
            BoolMatrix m(n);
            for (std::size_t len = 0; len + 2 <= n + 1; ++len) {
                if (!tables_.length_allowed(c, len)) continue;
                for (Pos i = 1; i + len + 1 <= n; ++i) m.set(i - 1, i + len);
            }
            return m;
        }
        return mask_from(n, [&](Pos i, Pos j) { return tables_.gap_allowed(c, i, j); });
    }
    return semilinear_mask(n, build_table(tree_.synthetic_root_language(), n));
}

BoolMatrix TreeMatmul::compute_node(std::size_t k) {
    const Word& w = inst_.text();
    const Word& p = inst_.pattern();
    const auto& node = tree_.node(k);
    BoolMatrix a(0);
    if (node.children.empty()) {
        a = build_B(w, p, node.a, node.b);
    } else {
        const auto& kids = node.children;
        a = build_B(w, p, node.a, tree_.node(kids[0]).a);
        for (std::size_t v = 0; v < kids.size(); ++v) {
            a = multiply(a, compute_node(kids[v]));
            ++multiplications_;
            const Pos from = tree_.node(kids[v]).b;
            const Pos to = (v + 1 < kids.size()) ? tree_.node(kids[v + 1]).a : node.b;
            a = multiply(a, build_B(w, p, from, to));
            ++multiplications_;
        }
    }
    return and_elementwise(a, node_mask(k));
}

MatchResult match_tree_matmul(const Instance& inst, const MatchOptions&) {
    Stopwatch clock;
    MatchResult result;
    result.algorithm = MatchAlgorithm::TreeMatmul;

    std::pair<std::size_t, std::size_t> offending;
    if (!is_non_intersecting(inst.constraints(), &offending))
        throw UnsupportedStructure("match_tree_matmul: constraints " +
                                   std::to_string(offending.first) + " and " +
                                   std::to_string(offending.second) + " intersect");

    if (inst.m() == 1) {
        // No constraints can exist; the pattern is a single symbol.
        const Symbol target = inst.pattern()[0];
        for (Symbol s : inst.text().symbols())
            if (s == target) { result.matched = true; break; }
        result.stats.millis = clock.millis();
        return result;
    }

    TreeMatmul pipeline(inst);
    const BoolMatrix root = pipeline.compute_node(0);
    result.matched = any_true(root);
    result.stats.multiplications = pipeline.multiplications();
    result.stats.millis = clock.millis();
    return result;
}

// ---------------------------------------------------------------------------
// Tuple enumeration (semilinear sets only)

namespace {

/// Greedy check that p[ps..pt] embeds into w[ws..wt]; records the chosen
/// positions when out is non-null. Empty pattern ranges succeed.
bool embed_range(const Word& w, const Word& p, Pos ps, Pos pt, Pos ws, Pos wt,
                 std::vector<Pos>* out) {
    Pos pos = ws;
    for (Pos t = ps; t <= pt; ++t) {
        while (pos <= wt && w.at(pos) != p.at(t)) ++pos;
        if (pos > wt) return false;
        if (out) out->push_back(pos);
        ++pos;
    }
    return true;
}

} // namespace

MatchResult match_tuple_enum(const Instance& inst, const MatchOptions& opts) {
    Stopwatch clock;
    MatchResult result;
    result.algorithm = MatchAlgorithm::TupleEnum;

    const auto& cs = inst.constraints().constraints();
    for (const auto& c : cs)
        if (!c.is_semilinear())
            throw UnsupportedConstraint("match_tuple_enum: regular constraint present");
    if (cs.size() > opts.tuple_enum_max_constraints)
        throw TooLarge("match_tuple_enum: " + std::to_string(cs.size()) +
                       " constraints exceed the guard of " +
                       std::to_string(opts.tuple_enum_max_constraints));

    const Word& w = inst.text();
    const Word& p = inst.pattern();
    const std::size_t n = inst.n();
    const std::size_t m = inst.m();
    const ConstraintTables tables(inst);

    // Admissible endpoint pairs per constraint, symbol-filtered up front.
    std::vector<std::vector<std::pair<Pos, Pos>>> candidates(cs.size());
    for (std::size_t c = 0; c < cs.size(); ++c) {
        for (Pos x = 1; x <= n; ++x) {
            if (w.at(x) != p.at(cs[c].i)) continue;
            for (Pos y = x + 1; y <= n; ++y) {
                if (w.at(y) != p.at(cs[c].j)) continue;
                if (tables.length_allowed(c, y - x - 1)) candidates[c].emplace_back(x, y);
            }
        }
    }

    std::map<Pos, Pos> pinned; // pattern position -> text position
    std::uint64_t tuples = 0;

    auto consistent = [&](Pos q, Pos target) {
        auto it = pinned.find(q);
        if (it != pinned.end()) return it->second == target;
        // Strict order against neighbouring pinned pattern positions.
        auto hi = pinned.upper_bound(q);
        if (hi != pinned.end() && target >= hi->second) return false;
        if (hi != pinned.begin() && std::prev(hi)->second >= target) return false;
        return true;
    };

    auto try_extend = [&]() -> std::optional<Embedding> {
        ++tuples;
        std::vector<Pos> chosen;
        Pos prev_q = 0, prev_pos = 0;
        for (const auto& [q, pos] : pinned) {
            if (!embed_range(w, p, prev_q + 1, q - 1, prev_pos + 1, pos - 1, &chosen))
                return std::nullopt;
            chosen.push_back(pos);
            prev_q = q;
            prev_pos = pos;
        }
        if (!embed_range(w, p, prev_q + 1, static_cast<Pos>(m), prev_pos + 1,
                         static_cast<Pos>(n), &chosen))
            return std::nullopt;
        return Embedding{std::move(chosen)};
    };

    std::function<bool(std::size_t)> search = [&](std::size_t c) -> bool {
        if (c == cs.size()) {
            if (auto e = try_extend()) {
                result.witness = std::move(*e);
                return true;
            }
            return false;
        }
        for (const auto& [x, y] : candidates[c]) {
            if (!consistent(cs[c].i, x)) continue;
            const bool had_i = pinned.count(cs[c].i) != 0;
            if (!had_i) pinned[cs[c].i] = x;
            if (consistent(cs[c].j, y)) {
                const bool had_j = pinned.count(cs[c].j) != 0;
                if (!had_j) pinned[cs[c].j] = y;
                if (search(c + 1)) return true;
                if (!had_j) pinned.erase(cs[c].j);
            }
            if (!had_i) pinned.erase(cs[c].i);
        }
        return false;
    };

    result.matched = search(0);
    result.stats.states = tuples;
    result.stats.millis = clock.millis();
    return result;
}

// ---------------------------------------------------------------------------
// Product NFA simulation (regular constraints; semilinear compiled)

namespace {

/// Counting DFA for a semilinear length set over [0, n]: state q counts the
/// symbols read so far, capped at n (reading past n rejects, which cannot
/// happen for gaps taken from a text of length n).
Dfa counting_dfa(const SemilinearSet& s, std::size_t n, std::uint32_t sigma) {
    const MembershipTable table = build_table(s, n);
    std::vector<Dfa::State> accepting;
    for (std::size_t q = 0; q <= n; ++q)
        if (table.query_unchecked(q)) accepting.push_back(static_cast<Dfa::State>(q));
    Dfa d(static_cast<std::uint32_t>(n + 1), sigma, 0, std::move(accepting));
    for (std::size_t q = 0; q + 1 <= n; ++q)
        for (std::uint32_t a = 0; a < sigma; ++a)
            d.add_transition(static_cast<Dfa::State>(q), a, static_cast<Dfa::State>(q + 1));
    return d;
}

struct MacroState {
    std::uint32_t counter = 0;
    std::vector<std::pair<std::uint32_t, Dfa::State>> trackers; // sorted by constraint

    bool operator==(const MacroState&) const = default;
};

struct MacroStateHash {
    std::size_t operator()(const MacroState& s) const {
        std::uint64_t h = s.counter;
        for (const auto& [c, q] : s.trackers) h = mix_hash(mix_hash(h, c), q);
        return static_cast<std::size_t>(h);
    }
};

} // namespace

MatchResult match_nfa_product(const Instance& inst, const MatchOptions& opts) {
    Stopwatch clock;
    MatchResult result;
    result.algorithm = MatchAlgorithm::NfaProduct;

    const Word& w = inst.text();
    const Word& p = inst.pattern();
    const std::size_t m = inst.m();
    const std::uint32_t sigma = static_cast<std::uint32_t>(inst.alphabet().size());

    // Every constraint as a DFA; semilinear members become counting DFAs.
    const auto& cs = inst.constraints().constraints();
    std::vector<Dfa> automata;
    automata.reserve(cs.size());
    for (const auto& c : cs)
        automata.push_back(c.is_regular() ? c.dfa() : counting_dfa(c.semilinear(), inst.n(), sigma));

    std::vector<std::vector<std::uint32_t>> starting_at(m + 1), ending_at(m + 1);
    for (std::size_t c = 0; c < cs.size(); ++c) {
        starting_at[cs[c].i].push_back(static_cast<std::uint32_t>(c));
        ending_at[cs[c].j].push_back(static_cast<std::uint32_t>(c));
    }

    std::unordered_set<MacroState, MacroStateHash> frontier;
    frontier.insert(MacroState{});
    std::uint64_t processed = 1;

    auto advance_trackers = [&](const MacroState& s, Symbol x, std::uint32_t skip_end)
        -> std::optional<std::vector<std::pair<std::uint32_t, Dfa::State>>> {
        std::vector<std::pair<std::uint32_t, Dfa::State>> out;
        out.reserve(s.trackers.size());
        for (const auto& [c, q] : s.trackers) {
            if (cs[c].j == skip_end) continue; // resolved at this step, does not read x
            const Dfa::State next = automata[c].step(q, x);
            if (next == Dfa::kUndefined) return std::nullopt;
            out.emplace_back(c, next);
        }
        return out;
    };

    for (Pos pos = 1; pos <= w.size(); ++pos) {
        const Symbol x = w.at(pos);
        std::unordered_set<MacroState, MacroStateHash> next;
        for (const auto& s : frontier) {
            // Leave the counter alone: every active tracker reads x.
            if (auto advanced = advance_trackers(s, x, 0))
                next.insert(MacroState{s.counter, std::move(*advanced)});

            // Consume x as the image of pattern position counter + 1.
            if (s.counter < m && x == p.at(s.counter + 1)) {
                const std::uint32_t placed = s.counter + 1;
                bool ok = true;
                for (std::uint32_t c : ending_at[placed]) {
                    auto it = std::find_if(s.trackers.begin(), s.trackers.end(),
                                           [&](const auto& t) { return t.first == c; });
                    if (it == s.trackers.end() || !automata[c].is_accepting(it->second)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                auto advanced = advance_trackers(s, x, placed);
                if (!advanced) continue;
                for (std::uint32_t c : starting_at[placed])
                    advanced->emplace_back(c, automata[c].start());
                std::sort(advanced->begin(), advanced->end());
                if (placed == static_cast<std::uint32_t>(m)) {
                    // No constraint can still be active at counter m.
                    result.matched = true;
                    result.stats.states = processed;
                    result.stats.millis = clock.millis();
                    return result;
                }
                next.insert(MacroState{placed, std::move(*advanced)});
            }
        }
        processed += next.size();
        if (processed > opts.nfa_state_budget)
            throw BudgetExhausted("match_nfa_product: macro-state budget of " +
                                  std::to_string(opts.nfa_state_budget) + " exhausted");
        frontier = std::move(next);
    }

    result.matched = false;
    result.stats.states = processed;
    result.stats.millis = clock.millis();
    return result;
}

// ---------------------------------------------------------------------------
// Boundary DP over a vertex ordering (vertex separation number)

namespace {

struct DpPhase {
    std::vector<Pos> tuples;    // flat, arity entries per tuple
    std::vector<std::uint32_t> parent;
    std::vector<Pos> placed;
    std::size_t arity = 0;
};

} // namespace

MatchResult match_vsn_dp(const Instance& inst, const MatchOptions& opts,
                         std::optional<std::vector<Pos>> ordering) {
    Stopwatch clock;
    MatchResult result;
    result.algorithm = MatchAlgorithm::VsnDp;

    const Word& w = inst.text();
    const Word& p = inst.pattern();
    const std::size_t n = inst.n();
    const Pos m = static_cast<Pos>(inst.m());

    if (m == 1) {
        for (Pos pos = 1; pos <= n; ++pos) {
            if (w.at(pos) == p.at(1)) {
                result.matched = true;
                result.witness = Embedding{{pos}};
                break;
            }
        }
        result.stats.millis = clock.millis();
        return result;
    }

    const ConstraintGraph graph = build_graph(m, inst.constraints());
    const ConstraintTables tables(inst);

    std::vector<Pos> order;
    if (ordering) {
        order = std::move(*ordering);
        if (order.size() != m) throw std::invalid_argument("match_vsn_dp: bad ordering length");
        std::vector<bool> seen(m + 1, false);
        for (Pos v : order) {
            if (v < 1 || v > m || seen[v])
                throw std::invalid_argument("match_vsn_dp: ordering is not a permutation of [m]");
            seen[v] = true;
        }
    } else {
        try {
            order = min_vsn_ordering(graph, opts.vsn_exact_m_limit).ordering;
        } catch (const TooLarge&) {
            order.resize(m);
            for (Pos v = 1; v <= m; ++v) order[v - 1] = v;
        }
    }

    std::vector<std::uint32_t> rank(m + 1, 0); // 1-based phase of each vertex
    for (std::size_t idx = 0; idx < order.size(); ++idx) rank[order[idx]] = static_cast<std::uint32_t>(idx + 1);

    // Boundary W_q: vertices placed by phase q that still have an unplaced
    // neighbour, in pattern-position order.
    std::vector<std::vector<Pos>> boundary(m + 1);
    for (Pos q = 1; q <= m; ++q) {
        for (Pos v = 1; v <= m; ++v) {
            if (rank[v] > q) continue;
            bool pending = false;
            for (Pos nb : graph.adjacency()[v - 1])
                if (rank[nb] > q) { pending = true; break; }
            if (pending) boundary[q].push_back(v);
        }
    }

    // Per phase q+1: checks against already placed endpoints, and the slot
    // map from (W_q, new vertex) to W_{q+1}.
    struct PendingCheck {
        std::size_t slot;        // index into W_q
        bool new_is_later;       // pattern order: boundary vertex < new vertex
        ConstraintGraph::Label label;
        std::size_t constraint;
    };

    auto gap_ok = [&](const PendingCheck& chk, Pos x, Pos y) {
        switch (chk.label) {
            case ConstraintGraph::Label::TrivialConsecutive: return true;
            case ConstraintGraph::Label::TrivialSpan:
                return y - x - 1 + 2 >= static_cast<std::size_t>(m);
            case ConstraintGraph::Label::Constraint:
                return tables.gap_allowed(chk.constraint, x, y);
        }
        return false;
    };

    DpPhase current;
    current.arity = boundary[1].size();
    {
        const Pos v1 = order[0];
        for (Pos pos = 1; pos <= n; ++pos) {
            if (w.at(pos) != p.at(v1)) continue;
            if (current.arity) current.tuples.push_back(pos);
            current.parent.push_back(0);
            current.placed.push_back(pos);
        }
    }
    std::uint64_t total_tuples = current.placed.size();

    std::vector<DpPhase> history;
    history.reserve(m);

    for (Pos q = 1; q < m; ++q) {
        const Pos v = order[q];
        const auto& wq = boundary[q];
        const auto& wq1 = boundary[q + 1];

        std::vector<PendingCheck> checks;
        for (std::size_t e : graph.incident_edges(v)) {
            const auto& edge = graph.edges()[e];
            const Pos other = (edge.u == v) ? edge.v : edge.u;
            if (rank[other] > q) continue; // not placed yet; checked later
            const auto it = std::lower_bound(wq.begin(), wq.end(), other);
            // other must still be in the boundary: it has v as an unplaced
            // neighbour at phase q.
            checks.push_back({static_cast<std::size_t>(it - wq.begin()), other < v, edge.label,
                              edge.constraint});
        }

        // Slots of W_{q+1} in terms of W_q (or the new vertex).
        std::vector<std::size_t> carry; // W_q slot feeding each W_{q+1} slot
        std::size_t new_slot = wq1.size();
        for (std::size_t s = 0; s < wq1.size(); ++s) {
            if (wq1[s] == v) {
                new_slot = s;
                carry.push_back(SIZE_MAX);
            } else {
                const auto it = std::lower_bound(wq.begin(), wq.end(), wq1[s]);
                carry.push_back(static_cast<std::size_t>(it - wq.begin()));
            }
        }

        DpPhase nextPhase;
        nextPhase.arity = wq1.size();
        std::unordered_set<std::uint64_t> seen;
        std::vector<Pos> scratch(wq1.size());

        const std::size_t count = current.placed.size();
        for (std::size_t e = 0; e < count; ++e) {
            const Pos* tuple = current.tuples.data() + e * current.arity;
            for (Pos pos = 1; pos <= n; ++pos) {
                if (w.at(pos) != p.at(v)) continue;
                bool ok = true;
                for (const auto& chk : checks) {
                    const Pos other_pos = tuple[chk.slot];
                    if (chk.new_is_later) {
                        if (!(other_pos < pos) || !gap_ok(chk, other_pos, pos)) { ok = false; break; }
                    } else {
                        if (!(pos < other_pos) || !gap_ok(chk, pos, other_pos)) { ok = false; break; }
                    }
                }
                if (!ok) continue;
                std::uint64_t h = 0;
                for (std::size_t s = 0; s < wq1.size(); ++s) {
                    scratch[s] = (s == new_slot) ? pos : tuple[carry[s]];
                    h = mix_hash(h, scratch[s]);
                }
                if (!wq1.empty() && !seen.insert(h).second) continue;
                if (wq1.empty() && !nextPhase.placed.empty()) continue; // single class
                nextPhase.tuples.insert(nextPhase.tuples.end(), scratch.begin(), scratch.end());
                nextPhase.parent.push_back(static_cast<std::uint32_t>(e));
                nextPhase.placed.push_back(pos);
            }
        }

        total_tuples += nextPhase.placed.size();
        history.push_back(std::move(current));
        current = std::move(nextPhase);
        if (current.placed.empty()) break;
    }

    result.stats.states = total_tuples;
    result.matched = history.size() + 1 == m && !current.placed.empty();
    if (result.matched) {
        std::vector<Pos> targets(m, 0);
        std::uint32_t idx = 0; // first surviving tuple of the last phase
        targets[order[m - 1] - 1] = current.placed[idx];
        idx = current.parent[idx];
        for (Pos q = m - 1; q >= 1; --q) {
            const DpPhase& phase = history[q - 1];
            targets[order[q - 1] - 1] = phase.placed[idx];
            idx = phase.parent[idx];
        }
        result.witness = Embedding{std::move(targets)};
    }
    result.stats.millis = clock.millis();
    return result;
}

// ---------------------------------------------------------------------------
// Dispatcher

MatchResult dispatch(const Instance& inst, const MatchOptions& opts) {
    const auto& cs = inst.constraints().constraints();

    if (is_non_intersecting(inst.constraints())) {
        MatchResult r = match_tree_matmul(inst, opts);
        r.stats.note = "dispatch: non-intersecting constraints -> tree-matmul";
        return r;
    }

    // Intersecting sets imply m >= 2 and at least two constraints.
    const ConstraintGraph graph = build_graph(static_cast<Pos>(inst.m()), inst.constraints());
    std::vector<Pos> order;
    int width = 0;
    bool optimal = false;
    try {
        VsnReport report = min_vsn_ordering(graph, opts.vsn_exact_m_limit);
        order = std::move(report.ordering);
        width = report.vsn;
        optimal = true;
    } catch (const TooLarge&) {
        order.resize(inst.m());
        for (Pos v = 1; v <= inst.m(); ++v) order[v - 1] = v;
        width = vsn_of_ordering(graph, order);
    }
    if (width <= opts.vsn_limit) {
        MatchResult r = match_vsn_dp(inst, opts, order);
        r.stats.note = std::string("dispatch: ") + (optimal ? "minimal" : "natural") +
                       " ordering width " + std::to_string(width) + " -> vsn-dp";
        return r;
    }

    const bool all_regular =
        std::all_of(cs.begin(), cs.end(), [](const auto& c) { return c.is_regular(); });
    if (all_regular) {
        // Pessimistic product estimate against the macro-state budget.
        double estimate = static_cast<double>(inst.m()) + 1;
        for (const auto& c : cs) {
            estimate *= static_cast<double>(c.dfa().state_count());
            if (estimate > static_cast<double>(opts.nfa_state_budget)) break;
        }
        if (estimate <= static_cast<double>(opts.nfa_state_budget)) {
            MatchResult r = match_nfa_product(inst, opts);
            r.stats.note = "dispatch: regular constraints, product estimate fits -> nfa-product";
            return r;
        }
    }

    const bool all_semilinear =
        std::all_of(cs.begin(), cs.end(), [](const auto& c) { return c.is_semilinear(); });
    if (all_semilinear && cs.size() <= opts.tuple_enum_max_constraints) {
        MatchResult r = match_tuple_enum(inst, opts);
        r.stats.note = "dispatch: few semilinear constraints -> tuple-enum";
        return r;
    }

    MatchResult r = oracle_match(inst, opts.oracle_step_budget);
    r.stats.note = "dispatch: fallback -> oracle";
    return r;
}

} // namespace gapmatch
