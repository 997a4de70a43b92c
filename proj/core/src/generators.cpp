#include "gapmatch/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "gapmatch/errors.hpp"

namespace gapmatch {

SourceGraph::SourceGraph(std::size_t vertex_count)
    : n_(vertex_count), adj_(vertex_count * vertex_count, false) {
    if (n_ == 0) throw std::invalid_argument("SourceGraph: needs at least one vertex");
    for (std::size_t v = 0; v < n_; ++v) adj_[v * n_ + v] = true;
}

void SourceGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= n_ || v >= n_) throw std::invalid_argument("SourceGraph: vertex out of range");
    adj_[u * n_ + v] = true;
    adj_[v * n_ + u] = true;
}

// ---------------------------------------------------------------------------
// Clique reduction

namespace {

/// Position of matrix cell (i, j) (1-based) in the flattened pattern/text:
/// one leading marker symbol, then row-major cells.
Pos cell(std::size_t i, std::size_t j, std::size_t width) {
    return static_cast<Pos>(1 + width * (i - 1) + j);
}

Instance gen_clique_impl(const SourceGraph& g, std::size_t k,
                         const SemilinearSet& row_language, bool row_constraints) {
    const std::size_t n = g.vertex_count();
    if (k < 1 || k > n) throw std::invalid_argument("gen_clique: requires 1 <= k <= n");

    Alphabet alphabet;
    const Symbol zero = alphabet.intern("0");
    const Symbol one = alphabet.intern("1");

    std::vector<Symbol> text;
    text.reserve(n * n + 2);
    text.push_back(zero);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) text.push_back(g.adjacent(i, j) ? one : zero);
    text.push_back(zero);

    std::vector<Symbol> pattern(k * k + 2, one);
    pattern.front() = zero;
    pattern.back() = zero;

    std::vector<GapConstraint> constraints;
    // Anchor: the pattern's outer zeros go to the text's outer zeros.
    constraints.push_back({1, static_cast<Pos>(k * k + 2),
                           SemilinearSet::singleton(static_cast<std::uint64_t>(n) * n)});
    // Diagonal cells embed on the text diagonal.
    for (std::size_t i = 1; i <= k; ++i)
        constraints.push_back({1, cell(i, i, k), SemilinearSet(std::vector<LinearSet>{
                                                     LinearSet(0, {n + 1})})});
    // Column synchronisation between consecutive rows.
    for (std::size_t i = 1; i + 1 <= k; ++i)
        for (std::size_t j = 1; j <= k; ++j)
            constraints.push_back({cell(i, j, k), cell(i + 1, j, k),
                                   SemilinearSet(std::vector<LinearSet>{LinearSet(n - 1, {n})})});
    // Each pattern row stays within one text row.
    if (row_constraints && k >= 2)
        for (std::size_t i = 1; i <= k; ++i)
            constraints.push_back({cell(i, 1, k), cell(i, k, k), row_language});

    return Instance(Word(std::move(text)), Word(std::move(pattern)),
                    ConstraintSet(std::move(constraints)), std::move(alphabet));
}

} // namespace

Instance gen_clique(const SourceGraph& g, std::size_t k) {
    const std::size_t n = g.vertex_count();
    // {0} u [n-1] as an explicit union of singletons (size n).
    SemilinearSet row = SemilinearSet::bounded_range(0, n - 1);
    return gen_clique_impl(g, k, row, true);
}

Instance gen_clique_turing(const SourceGraph& g, std::size_t k, std::size_t d) {
    if (d >= g.vertex_count())
        throw std::invalid_argument("gen_clique_turing: requires d in {0} u [n-1]");
    return gen_clique_impl(g, k, SemilinearSet::singleton(d), true);
}

// ---------------------------------------------------------------------------
// Exact-1-in-3-SAT reduction

namespace {

/// The gap languages of the SAT reduction, one per clause rank of the
/// variable. A gap runs from the embedded b of a variable block to the
/// embedded b of a clause block: its first symbol says whether the variable
/// was selected (# = the variable's own separator follows immediately) and
/// the run of b's after its last separator says which b of the clause block
/// was taken. Admissible (first symbol, trailing run) combinations:
///   rank 1: (#, 0) (b, 1) (b, 2)
///   rank 2: (b, 0) (#, 1) (b, 2)
///   rank 3: (b, 0) (b, 1) (#, 2)
/// A leading # already counts as a separator: when the last variable block
/// sits right next to the first clause block the gap contains only one #.
/// Built as the obvious 9-state automaton (start, then per first symbol a
/// trailing-run counter relative to the last #), then minimised, which gets
/// each of them to at most 8 states.
Dfa sat_rank_dfa(int rank, Symbol b, Symbol hash, std::uint32_t sigma) {
    // Raw states: 0 = start; branch(first symbol) in {hash: 0, b: 1};
    // per branch: 0 = no # yet, 1..3 = trailing b count 0..2 after the
    // last #. Trailing counts >= 3 merge with "no #" (another # can still
    // reset either).
    const auto raw = [](int branch, int sub) { return 1 + branch * 4 + sub; };
    std::vector<Dfa::State> accepting;
    for (int branch = 0; branch < 2; ++branch) {
        for (int s = 0; s <= 2; ++s) {
            const bool selected = (s == rank - 1);
            const bool accept = (branch == 0) ? selected : !selected;
            if (accept) accepting.push_back(static_cast<Dfa::State>(raw(branch, s + 1)));
        }
    }
    Dfa d(9, sigma, 0, std::move(accepting));
    d.add_transition(0, hash, static_cast<Dfa::State>(raw(0, 1)));
    d.add_transition(0, b, static_cast<Dfa::State>(raw(1, 0)));
    for (int branch = 0; branch < 2; ++branch) {
        d.add_transition(static_cast<Dfa::State>(raw(branch, 0)), b,
                         static_cast<Dfa::State>(raw(branch, 0)));
        d.add_transition(static_cast<Dfa::State>(raw(branch, 0)), hash,
                         static_cast<Dfa::State>(raw(branch, 1)));
        for (int s = 1; s <= 3; ++s) {
            d.add_transition(static_cast<Dfa::State>(raw(branch, s)), hash,
                             static_cast<Dfa::State>(raw(branch, 1)));
            d.add_transition(static_cast<Dfa::State>(raw(branch, s)), b,
                             static_cast<Dfa::State>(s == 3 ? raw(branch, 0)
                                                            : raw(branch, s + 1)));
        }
    }
    return d;
}

/// Moore partition refinement on the completed automaton, then a rebuild
/// without the dead and unreachable states.
Dfa minimize(const Dfa& d) {
    const std::uint32_t n = d.state_count();
    const std::uint32_t sigma = d.sigma();
    const std::uint32_t dead = n; // implicit completion state

    auto step = [&](std::uint32_t q, Symbol a) -> std::uint32_t {
        if (q == dead) return dead;
        const Dfa::State t = d.step(q, a);
        return t == Dfa::kUndefined ? dead : t;
    };

    std::vector<std::uint32_t> cls(n + 1);
    for (std::uint32_t q = 0; q < n; ++q) cls[q] = d.is_accepting(q) ? 1 : 0;
    cls[dead] = 0;

    bool changed = true;
    while (changed) {
        changed = false;
        std::map<std::vector<std::uint32_t>, std::uint32_t> signature_to_class;
        std::vector<std::uint32_t> next_cls(n + 1);
        for (std::uint32_t q = 0; q <= n; ++q) {
            std::vector<std::uint32_t> sig{cls[q]};
            for (Symbol a = 0; a < sigma; ++a) sig.push_back(cls[step(q, a)]);
            auto [it, inserted] =
                signature_to_class.emplace(std::move(sig),
                                           static_cast<std::uint32_t>(signature_to_class.size()));
            next_cls[q] = it->second;
        }
        if (next_cls != cls) changed = true;
        cls = std::move(next_cls);
    }

    // Keep classes reachable from the start, skipping the dead class.
    const std::uint32_t dead_cls = cls[dead];
    std::map<std::uint32_t, std::uint32_t> renumber;
    std::vector<std::uint32_t> worklist;
    auto visit = [&](std::uint32_t c) {
        if (c == dead_cls || renumber.count(c)) return;
        renumber[c] = static_cast<std::uint32_t>(renumber.size());
        worklist.push_back(c);
    };
    visit(cls[d.start()]);
    std::vector<std::uint32_t> representative(n + 2, 0);
    for (std::uint32_t q = 0; q <= n; ++q) representative[cls[q]] = q;
    for (std::size_t w = 0; w < worklist.size(); ++w) {
        const std::uint32_t rep = representative[worklist[w]];
        for (Symbol a = 0; a < sigma; ++a) visit(cls[step(rep, a)]);
    }

    std::vector<Dfa::State> accepting;
    for (const auto& [c, id] : renumber)
        if (representative[c] != dead && d.is_accepting(representative[c]))
            accepting.push_back(id);
    Dfa out(static_cast<std::uint32_t>(renumber.size()), sigma, renumber.at(cls[d.start()]),
            std::move(accepting));
    for (const auto& [c, id] : renumber) {
        const std::uint32_t rep = representative[c];
        for (Symbol a = 0; a < sigma; ++a) {
            const std::uint32_t t = cls[step(rep, a)];
            if (t != dead_cls) out.add_transition(id, a, renumber.at(t));
        }
    }
    return out;
}

} // namespace

Instance gen_sat(const CnfExact1& f) {
    const std::size_t n = f.variables;
    const std::size_t m = f.clauses.size();
    for (const auto& clause : f.clauses) {
        if (!(clause[0] < clause[1] && clause[1] < clause[2]))
            throw std::invalid_argument("gen_sat: clause variables must be sorted and distinct");
        if (clause[0] < 1 || clause[2] > n)
            throw std::invalid_argument("gen_sat: clause variable out of range");
    }

    Alphabet alphabet;
    const Symbol b = alphabet.intern("b");
    const Symbol hash = alphabet.intern("#");
    const std::uint32_t sigma = 2;

    // u = (b#)^(n+m), v = (bb#)^n (bbb#)^m.
    std::vector<Symbol> pattern;
    pattern.reserve(2 * (n + m));
    for (std::size_t i = 0; i < n + m; ++i) {
        pattern.push_back(b);
        pattern.push_back(hash);
    }
    std::vector<Symbol> text;
    text.reserve(3 * n + 4 * m);
    for (std::size_t i = 0; i < n; ++i) {
        text.push_back(b);
        text.push_back(b);
        text.push_back(hash);
    }
    for (std::size_t j = 0; j < m; ++j) {
        text.push_back(b);
        text.push_back(b);
        text.push_back(b);
        text.push_back(hash);
    }

    const Dfa rank_dfa[3] = {minimize(sat_rank_dfa(1, b, hash, sigma)),
                             minimize(sat_rank_dfa(2, b, hash, sigma)),
                             minimize(sat_rank_dfa(3, b, hash, sigma))};

    std::vector<GapConstraint> constraints;
    for (std::size_t j = 0; j < m; ++j) {
        const Pos clause_pos = static_cast<Pos>(2 * (n + j + 1) - 1);
        for (int rank = 1; rank <= 3; ++rank) {
            const std::uint32_t var = f.clauses[j][rank - 1];
            const Pos var_pos = static_cast<Pos>(2 * var - 1);
            constraints.push_back({var_pos, clause_pos, rank_dfa[rank - 1]});
        }
    }

    return Instance(Word(std::move(text)), Word(std::move(pattern)),
                    ConstraintSet(std::move(constraints)), std::move(alphabet));
}

// ---------------------------------------------------------------------------
// 3-orthogonal-vectors reduction

namespace {

struct Ov3Encoder {
    Symbol d0, d1, hash, at, dollar, bar;

    // C_w(0) = #011, C_w(1) = #001
    std::vector<Symbol> text_bit(bool bit) const {
        return bit ? std::vector<Symbol>{hash, d0, d0, d1} : std::vector<Symbol>{hash, d0, d1, d1};
    }
    // C_p(x) = #x
    std::vector<Symbol> pattern_bit(bool bit) const {
        return {hash, bit ? d1 : d0};
    }

    std::vector<Symbol> text_block(const std::vector<bool>& v) const {
        std::vector<Symbol> out{at};
        for (bool bit : v)
            for (Symbol s : text_bit(bit)) out.push_back(s);
        out.push_back(dollar);
        return out;
    }
    std::vector<Symbol> pattern_block(const std::vector<bool>& v) const {
        std::vector<Symbol> out{at};
        for (bool bit : v)
            for (Symbol s : pattern_bit(bit)) out.push_back(s);
        out.push_back(dollar);
        return out;
    }
};

void append(std::vector<Symbol>& dst, const std::vector<Symbol>& src) {
    dst.insert(dst.end(), src.begin(), src.end());
}

void append_reversed(std::vector<Symbol>& dst, const std::vector<Symbol>& src) {
    dst.insert(dst.end(), src.rbegin(), src.rend());
}

} // namespace

Instance gen_ov3(const OvTriple& t) {
    const std::size_t n = t.n;
    const std::size_t d = t.d;
    if (n < 1 || d < 1) throw std::invalid_argument("gen_ov3: requires n >= 1 and d >= 1");
    if (t.a.size() != n || t.b.size() != n || t.c.size() != n)
        throw std::invalid_argument("gen_ov3: sets must contain n vectors each");

    Alphabet alphabet;
    Ov3Encoder enc{alphabet.intern("0"), alphabet.intern("1"), alphabet.intern("#"),
                   alphabet.intern("@"), alphabet.intern("$"), alphabet.intern("|")};

    const std::size_t block = 2 * d + 2; // pattern block length

    // p = rev(Cp(a_n)) ... rev(Cp(a_1)) | Cp(a_1) ... Cp(a_n)
    std::vector<Symbol> pattern;
    for (std::size_t i = n; i >= 1; --i) append_reversed(pattern, enc.pattern_block(t.a[i - 1]));
    pattern.push_back(enc.bar);
    for (std::size_t i = 1; i <= n; ++i) append(pattern, enc.pattern_block(t.a[i - 1]));

    // w0 = (Cw(0))^(n-1)
    const std::vector<bool> zero_vec(d, false);
    std::vector<Symbol> w0;
    for (std::size_t i = 0; i + 1 < n; ++i) append(w0, enc.text_block(zero_vec));
    std::vector<Symbol> w0_rev(w0.rbegin(), w0.rend());

    // w = rev(w0) # rev(Cw(c_n)) ... rev(Cw(c_1)) # rev(w0) | w0 # Cw(b_1) ... Cw(b_n) # w0
    std::vector<Symbol> text;
    append(text, w0_rev);
    text.push_back(enc.hash);
    for (std::size_t i = n; i >= 1; --i) append_reversed(text, enc.text_block(t.c[i - 1]));
    text.push_back(enc.hash);
    append(text, w0_rev);
    text.push_back(enc.bar);
    append(text, w0);
    text.push_back(enc.hash);
    for (std::size_t i = 1; i <= n; ++i) append(text, enc.text_block(t.b[i - 1]));
    text.push_back(enc.hash);
    append(text, w0);

    // Block starts in the pattern: s_i = @ of Cp(a_i), sbar_i = @ of the
    // mirrored block (its rightmost symbol).
    const std::size_t mid = n * block + 1; // position of |
    auto s = [&](std::size_t i) { return static_cast<Pos>(mid + (i - 1) * block + 1); };
    auto sbar = [&](std::size_t i) { return static_cast<Pos>((n - i + 1) * block); };

    const SemilinearSet exactly0 = SemilinearSet::singleton(0);
    const SemilinearSet upto2 = SemilinearSet::bounded_range(0, 2);
    const SemilinearSet zero_or_odd =
        SemilinearSet(std::vector<LinearSet>{LinearSet(0), LinearSet(1, {2})});
    const SemilinearSet odd = SemilinearSet(std::vector<LinearSet>{LinearSet(1, {2})});
    const SemilinearSet even = SemilinearSet(std::vector<LinearSet>{LinearSet(0, {2})});

    std::vector<GapConstraint> constraints;
    for (std::size_t i = 1; i <= n; ++i) {
        // The block-start # sits right next to @, on both sides.
        constraints.push_back({s(i), s(i) + 1, exactly0});
        constraints.push_back({sbar(i) - 1, sbar(i), exactly0});
        // Within a block, neighbouring pattern symbols stay within one text
        // component: gaps of at most 2.
        for (Pos v = 1; v <= 2 * d; ++v) {
            constraints.push_back({s(i) + v, s(i) + v + 1, upto2});
            constraints.push_back({sbar(i) - v - 1, sbar(i) - v, upto2});
        }
        // Bridge: mirrored and plain block of the same vector start an even
        // distance apart (an odd-length factor between them).
        constraints.push_back({sbar(i), s(i), odd});
        // Orthogonality: the two encodings of a set 1-bit must sit an even
        // distance apart, which no pair of 1-bits in the other two vectors
        // allows.
        for (std::size_t u = 1; u <= d; ++u)
            if (t.a[i - 1][u - 1])
                constraints.push_back({static_cast<Pos>(sbar(i) - 2 * u),
                                       static_cast<Pos>(s(i) + 2 * u), even});
    }
    // Adjacent plain blocks: adjacent in the text, or an even distance apart.
    for (std::size_t i = 2; i <= n; ++i)
        constraints.push_back({s(i) - 1, s(i), zero_or_odd});

    return Instance(Word(std::move(text)), Word(std::move(pattern)),
                    ConstraintSet(std::move(constraints)), std::move(alphabet));
}

// ---------------------------------------------------------------------------
// Brute-force source solvers

bool brute_clique(const SourceGraph& g, std::size_t k) {
    const std::size_t n = g.vertex_count();
    if (n > 10) throw TooLarge("brute_clique: more than 10 vertices");
    if (k < 1 || k > n) throw std::invalid_argument("brute_clique: requires 1 <= k <= n");
    std::vector<std::size_t> pick;
    auto search = [&](auto&& self, std::size_t from) -> bool {
        if (pick.size() == k) return true;
        for (std::size_t v = from; v < n; ++v) {
            bool ok = true;
            for (std::size_t u : pick)
                if (!g.adjacent(u, v)) { ok = false; break; }
            if (!ok) continue;
            pick.push_back(v);
            if (self(self, v + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return search(search, 0);
}

bool brute_1in3(const CnfExact1& f) {
    if (f.variables > 10) throw TooLarge("brute_1in3: more than 10 variables");
    const std::size_t total = std::size_t{1} << f.variables;
    for (std::size_t assignment = 0; assignment < total; ++assignment) {
        bool ok = true;
        for (const auto& clause : f.clauses) {
            int chosen = 0;
            for (std::uint32_t var : clause) chosen += (assignment >> (var - 1)) & 1;
            if (chosen != 1) { ok = false; break; }
        }
        if (ok) return true;
    }
    return false;
}

bool brute_ov3(const OvTriple& t) {
    if (t.n > 6) throw TooLarge("brute_ov3: more than 6 vectors per set");
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j)
            for (std::size_t k = 0; k < t.n; ++k) {
                bool orthogonal = true;
                for (std::size_t u = 0; u < t.d; ++u)
                    if (t.a[i][u] && t.b[j][u] && t.c[k][u]) { orthogonal = false; break; }
                if (orthogonal) return true;
            }
    return false;
}

// ---------------------------------------------------------------------------
// Seeded random sources

SourceGraph random_graph(std::size_t n, double edge_probability, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(edge_probability);
    SourceGraph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

CnfExact1 random_cnf(std::size_t variables, std::size_t clauses, std::uint64_t seed) {
    if (variables < 3) throw std::invalid_argument("random_cnf: needs at least 3 variables");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(1, static_cast<std::uint32_t>(variables));
    CnfExact1 f;
    f.variables = variables;
    for (std::size_t j = 0; j < clauses; ++j) {
        std::array<std::uint32_t, 3> clause{};
        do {
            for (auto& v : clause) v = pick(rng);
            std::sort(clause.begin(), clause.end());
        } while (clause[0] == clause[1] || clause[1] == clause[2]);
        f.clauses.push_back(clause);
    }
    return f;
}

OvTriple random_ov(std::size_t n, std::size_t d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    OvTriple t;
    t.n = n;
    t.d = d;
    auto sample = [&]() {
        std::vector<std::vector<bool>> set(n, std::vector<bool>(d));
        for (auto& vec : set)
            for (std::size_t u = 0; u < d; ++u) vec[u] = coin(rng);
        return set;
    };
    t.a = sample();
    t.b = sample();
    t.c = sample();
    return t;
}

} // namespace gapmatch
