#pragma once

// Shared test helpers: deterministic random inputs and the independent
// oracles the implementation is checked against. Everything here is written
// from the definitions, not from the production code paths.

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gapmatch/core.hpp"
#include "gapmatch/boolmat.hpp"
#include "gapmatch/matchers.hpp"
#include "gapmatch/structure.hpp"

namespace testutil {

using namespace gapmatch;

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Word random_word(Rng& rng, std::size_t length, std::uint32_t sigma) {
    std::vector<Symbol> syms(length);
    for (auto& s : syms) s = static_cast<Symbol>(pick(rng, 0, sigma - 1));
    return Word(std::move(syms));
}

inline SemilinearSet random_semilinear(Rng& rng, std::uint64_t max_offset,
                                       std::uint64_t max_period = 6) {
    const std::size_t parts = pick(rng, 1, 3);
    std::vector<LinearSet> linear;
    for (std::size_t p = 0; p < parts; ++p) {
        const std::uint64_t offset = pick(rng, 0, max_offset);
        std::vector<std::uint64_t> periods;
        const std::size_t count = pick(rng, 0, 2);
        while (periods.size() < count) {
            const std::uint64_t period = pick(rng, 1, max_period);
            if (std::find(periods.begin(), periods.end(), period) == periods.end())
                periods.push_back(period);
        }
        linear.emplace_back(offset, std::move(periods));
    }
    return SemilinearSet(std::move(linear));
}

inline Dfa random_dfa(Rng& rng, std::uint32_t max_states, std::uint32_t sigma,
                      double defined_probability = 0.85) {
    const std::uint32_t states = static_cast<std::uint32_t>(pick(rng, 1, max_states));
    std::vector<Dfa::State> accepting;
    for (std::uint32_t q = 0; q < states; ++q)
        if (pick(rng, 0, 2) == 0) accepting.push_back(q);
    Dfa dfa(states, sigma, static_cast<Dfa::State>(pick(rng, 0, states - 1)),
            std::move(accepting));
    std::bernoulli_distribution defined(defined_probability);
    for (std::uint32_t q = 0; q < states; ++q)
        for (Symbol a = 0; a < sigma; ++a)
            if (defined(rng))
                dfa.add_transition(q, a, static_cast<Dfa::State>(pick(rng, 0, states - 1)));
    return dfa;
}

struct InstanceConfig {
    std::size_t max_n = 40;
    std::size_t max_m = 8;
    std::uint32_t max_sigma = 4;
    std::size_t max_constraints = 5;
    bool force_non_intersecting = false;
    bool semilinear_only = false;
    bool regular_only = false;
};

/// A random instance whose pattern is sampled from the text so that a fair
/// share of instances are positive.
inline Instance random_instance(Rng& rng, const InstanceConfig& cfg = {}) {
    const std::uint32_t sigma = static_cast<std::uint32_t>(pick(rng, 2, cfg.max_sigma));
    const std::size_t m = pick(rng, 1, cfg.max_m);
    const std::size_t n = pick(rng, std::max<std::size_t>(m, 2), cfg.max_n);
    Alphabet alphabet;
    for (std::uint32_t s = 0; s < sigma; ++s) alphabet.intern(std::string(1, char('a' + s)));

    Word text = random_word(rng, n, sigma);
    std::vector<Symbol> pattern(m);
    if (pick(rng, 0, 3) != 0) {
        // subsequence of the text, so unconstrained matching succeeds
        std::vector<std::size_t> positions(n);
        for (std::size_t i = 0; i < n; ++i) positions[i] = i;
        std::shuffle(positions.begin(), positions.end(), rng);
        positions.resize(m);
        std::sort(positions.begin(), positions.end());
        for (std::size_t t = 0; t < m; ++t) pattern[t] = text[positions[t]];
    } else {
        for (auto& s : pattern) s = static_cast<Symbol>(pick(rng, 0, sigma - 1));
    }

    std::vector<GapConstraint> constraints;
    if (m >= 2) {
        const std::size_t want = pick(rng, 0, cfg.max_constraints);
        std::vector<std::pair<Pos, Pos>> used;
        for (std::size_t attempt = 0; attempt < 4 * want + 8 && constraints.size() < want;
             ++attempt) {
            const Pos i = static_cast<Pos>(pick(rng, 1, m - 1));
            const Pos j = static_cast<Pos>(pick(rng, i + 1, m));
            if (std::find(used.begin(), used.end(), std::make_pair(i, j)) != used.end()) continue;
            if (cfg.force_non_intersecting) {
                bool bad = false;
                for (const auto& [a, b] : used)
                    if (relation(interval_of(a, b), interval_of(i, j)) ==
                        IntervalRelation::Intersects) { bad = true; break; }
                if (bad) continue;
            }
            used.emplace_back(i, j);
            const bool semilinear =
                cfg.semilinear_only || (!cfg.regular_only && pick(rng, 0, 1) == 0);
            if (semilinear) {
                constraints.push_back({i, j, random_semilinear(rng, n / 2)});
            } else {
                constraints.push_back({i, j, random_dfa(rng, 4, sigma)});
            }
        }
    }
    return Instance(std::move(text), Word(std::move(pattern)),
                    ConstraintSet(std::move(constraints)), std::move(alphabet));
}

// ---------------------------------------------------------------------------
// Independent oracles

/// Naive triple-loop boolean matrix product.
inline BoolMatrix naive_multiply(const BoolMatrix& a, const BoolMatrix& b) {
    BoolMatrix c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            bool value = false;
            for (std::size_t k = 0; k < a.dim() && !value; ++k)
                value = a.get(i, k) && b.get(k, j);
            if (value) c.set(i, j);
        }
    return c;
}

/// Geometric arc-crossing test on the half-plane diagram: two semicircles
/// with feet at (a, b) and (a2, b2) cross iff their endpoints strictly
/// interleave.
inline bool arcs_cross(Pos a, Pos b, Pos a2, Pos b2) {
    return (a < a2 && a2 < b && b < b2) || (a2 < a && a < b2 && b2 < b);
}

/// Naive minimal-j scan for bound: try every j >= i directly from the
/// subsequence definition.
inline Pos naive_bound(const Word& w, const Word& p, Pos i, Pos s, Pos t) {
    for (Pos j = i; j <= w.size(); ++j) {
        // greedy subsequence check of p[s..t] within w[i..j]
        Pos pos = i;
        bool ok = true;
        for (Pos u = s; u <= t; ++u) {
            while (pos <= j && w.at(pos) != p.at(u)) ++pos;
            if (pos > j) { ok = false; break; }
            ++pos;
        }
        if (ok) return j;
    }
    return kInfinity;
}

/// Pinned-embedding oracle: does p[s..t] embed into w[i..j] with e(s) = i,
/// e(t) = j, satisfying the given constraints (indices into the instance's
/// set)? Pure backtracking from the definition.
inline bool pinned_embedding_exists(const Instance& inst, Pos s, Pos t, Pos i, Pos j,
                                    const std::vector<std::size_t>& constraint_indices) {
    const Word& w = inst.text();
    const Word& p = inst.pattern();
    if (i < 1 || j > w.size() || i > j) return false;
    if (s == t && i != j) return false;
    if (w.at(i) != p.at(s) || w.at(j) != p.at(t)) return false;

    const std::size_t span = t - s + 1;
    std::vector<Pos> targets(span, 0);
    targets.front() = i;
    targets.back() = j;

    auto gaps_ok = [&](const std::vector<Pos>& chosen) {
        for (std::size_t c : constraint_indices) {
            const auto& gc = inst.constraints()[c];
            if (gc.i < s || gc.j > t) return false; // out of scope, cannot evaluate
            const Pos x = chosen[gc.i - s];
            const Pos y = chosen[gc.j - s];
            const Word g = w.slice(x + 1, y - 1);
            if (gc.is_semilinear()) {
                if (!contains(gc.semilinear(), g.size())) return false;
            } else {
                if (!dfa_accepts(gc.dfa(), g)) return false;
            }
        }
        return true;
    };

    if (span == 1) return gaps_ok(targets);
    if (span == 2) return i < j && gaps_ok(targets);

    auto search = [&](auto&& self, std::size_t idx, Pos from) -> bool {
        if (idx + 1 == span) return from <= j && gaps_ok(targets);
        for (Pos pos = from; pos < j; ++pos) {
            if (w.at(pos) != p.at(s + static_cast<Pos>(idx))) continue;
            targets[idx] = pos;
            if (self(self, idx + 1, pos + 1)) return true;
        }
        return false;
    };
    return search(search, 1, i + 1);
}

/// Plain greedy subsequence test (no constraints).
inline bool greedy_subsequence(const Word& w, const Word& p) {
    Pos pos = 1;
    for (Pos t = 1; t <= p.size(); ++t) {
        while (pos <= w.size() && w.at(pos) != p.at(t)) ++pos;
        if (pos > w.size()) return false;
        ++pos;
    }
    return true;
}

} // namespace testutil
