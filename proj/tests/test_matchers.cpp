#include <doctest.h>

#include "gapmatch/errors.hpp"
#include "gapmatch/generators.hpp"
#include "gapmatch/matchers.hpp"
#include "testutil.hpp"
#include "worked_example.hpp"

using namespace gapmatch;

namespace {

Instance simple_instance(const std::string& text, const std::string& pattern,
                         std::vector<GapConstraint> cs = {}) {
    Alphabet alphabet;
    Word w = alphabet.encode_chars(text);
    Word p = alphabet.encode_chars(pattern);
    return Instance(std::move(w), std::move(p), ConstraintSet(std::move(cs)),
                    std::move(alphabet));
}

} // namespace

TEST_CASE("bound: greedy least end position") {
    Alphabet alphabet;
    const Word w = alphabet.encode_chars("baab");
    const Word p = alphabet.encode_chars("ab");
    CHECK(bound(w, p, 1, 1, 2) == 4);
    CHECK(bound(w, p, 2, 1, 2) == 4);
    CHECK(bound(w, p, 1, 1, 1) == 2);  // single position: first matching symbol
    CHECK(bound(w, p, 4, 2, 2) == 4);  // t = s at a matching symbol
    CHECK(bound(w, p, 3, 2, 2) == 4);
    CHECK(bound(w, alphabet.encode_chars("bb"), 3, 1, 2) == kInfinity); // no b after a b at 3.. 4
    CHECK(bound(alphabet.encode_chars("abc"), alphabet.encode_chars("cb"), 1, 1, 2) == kInfinity);
}

TEST_CASE("bound equals the naive minimal-j scan") {
    testutil::Rng rng(31);
    for (int round = 0; round < 60; ++round) {
        const std::uint32_t sigma = static_cast<std::uint32_t>(testutil::pick(rng, 2, 3));
        const Word w = testutil::random_word(rng, testutil::pick(rng, 1, 32), sigma);
        const Word p = testutil::random_word(rng, testutil::pick(rng, 1, 6), sigma);
        for (Pos i = 1; i <= w.size(); ++i)
            for (Pos s = 1; s <= p.size(); ++s)
                for (Pos t = s; t <= p.size(); ++t)
                    REQUIRE(bound(w, p, i, s, t) == testutil::naive_bound(w, p, i, s, t));
    }
}

TEST_CASE("bound satisfies the layering recurrence") {
    testutil::Rng rng(32);
    for (int round = 0; round < 40; ++round) {
        const Word w = testutil::random_word(rng, testutil::pick(rng, 2, 28), 2);
        const Word p = testutil::random_word(rng, testutil::pick(rng, 2, 5), 2);
        for (Pos i = 1; i <= w.size(); ++i)
            for (Pos t = 2; t <= p.size(); ++t) {
                const Pos prev = bound(w, p, i, 1, t - 1);
                Pos expect = kInfinity;
                if (prev != kInfinity)
                    for (Pos j = prev + 1; j <= w.size(); ++j)
                        if (w.at(j) == p.at(t)) { expect = j; break; }
                REQUIRE(bound(w, p, i, 1, t) == expect);
            }
    }
}

TEST_CASE("build_B matches the pinned-embedding oracle") {
    testutil::Rng rng(33);
    for (int round = 0; round < 25; ++round) {
        const Instance inst =
            testutil::random_instance(rng, {.max_n = 14, .max_m = 5, .max_constraints = 0});
        const Word& w = inst.text();
        const Word& p = inst.pattern();
        for (Pos s = 1; s <= p.size(); ++s)
            for (Pos t = s; t <= p.size(); ++t) {
                const BoolMatrix b = build_B(w, p, s, t);
                for (Pos i = 1; i <= w.size(); ++i)
                    for (Pos j = 1; j <= w.size(); ++j)
                        REQUIRE(b.get(i - 1, j - 1) ==
                                testutil::pinned_embedding_exists(inst, s, t, i, j, {}));
            }
    }
}

TEST_CASE("build_B degenerate shapes") {
    Alphabet alphabet;
    const Word w = alphabet.encode_chars("abab");
    const Word p = alphabet.encode_chars("ab");
    SUBCASE("s = t restricts to the matching diagonal") {
        const BoolMatrix b = build_B(w, p, 1, 1);
        for (Pos i = 1; i <= 4; ++i)
            for (Pos j = 1; j <= 4; ++j)
                CHECK(b.get(i - 1, j - 1) == (i == j && (i == 1 || i == 3)));
    }
    SUBCASE("pattern longer than the window is impossible") {
        const Word p4 = alphabet.encode_chars("abab");
        const BoolMatrix b = build_B(w, p4, 1, 4);
        CHECK(b.get(0, 3));
        for (Pos i = 1; i <= 4; ++i)
            for (Pos j = i; j <= 4; ++j)
                if (j - i + 1 < 4) CHECK_FALSE(b.get(i - 1, j - 1));
    }
}

TEST_CASE("mask entries follow the gap languages") {
    SUBCASE("all lengths allowed sets everything above the diagonal") {
        Alphabet alphabet;
        const Word w = alphabet.encode_chars("aaaa");
        const BoolMatrix m = mask({1, 2, SemilinearSet::all()}, w);
        for (Pos i = 1; i <= 4; ++i)
            for (Pos j = 1; j <= 4; ++j) CHECK(m.get(i - 1, j - 1) == (i < j));
    }
    SUBCASE("singleton length: one diagonal") {
        Alphabet alphabet;
        const Word w = alphabet.encode_chars("aaaaaa");
        const BoolMatrix m = mask({1, 2, SemilinearSet::singleton(4)}, w); // j - i - 1 = 4
        for (Pos i = 1; i <= 6; ++i)
            for (Pos j = 1; j <= 6; ++j) CHECK(m.get(i - 1, j - 1) == (j == i + 5));
    }
    SUBCASE("regular mask through the factor table") {
        Alphabet alphabet;
        const Word w = alphabet.encode_chars("xabx");
        Dfa ab_star(2, 3, 0, {0});
        ab_star.add_transition(0, *alphabet.find("a"), 1);
        ab_star.add_transition(1, *alphabet.find("b"), 0);
        const BoolMatrix m = mask({1, 2, ab_star}, w);
        CHECK(m.get(0, 3));        // gap "ab"
        CHECK_FALSE(m.get(0, 2));  // gap "a"
        CHECK(m.get(0, 1));        // empty gap, accepting start
        CHECK(m.get(2, 3));        // empty gap
        CHECK_FALSE(m.get(1, 0));  // j <= i stays false
    }
}

TEST_CASE("tree pipeline nodes match the constrained pinned oracle") {
    testutil::Rng rng(34);
    int checked = 0;
    for (int round = 0; round < 120 && checked < 25; ++round) {
        const Instance inst = testutil::random_instance(
            rng, {.max_n = 12, .max_m = 6, .max_constraints = 4,
                  .force_non_intersecting = true});
        if (inst.m() < 2) continue;
        ++checked;
        TreeMatmul pipeline(inst);
        const ConstraintTree& tree = pipeline.tree();
        for (std::size_t k = tree.node_count(); k-- > 1;) { // every real node
            const auto& node = tree.node(k);
            // constraints of the subtree rooted at k
            std::vector<std::size_t> scope;
            std::vector<std::size_t> stack{k};
            while (!stack.empty()) {
                const std::size_t cur = stack.back();
                stack.pop_back();
                if (tree.node(cur).constraint) scope.push_back(*tree.node(cur).constraint);
                for (std::size_t child : tree.node(cur).children) stack.push_back(child);
            }
            const BoolMatrix a = pipeline.compute_node(k);
            for (Pos i = 1; i <= inst.n(); ++i)
                for (Pos j = 1; j <= inst.n(); ++j)
                    REQUIRE(a.get(i - 1, j - 1) ==
                            testutil::pinned_embedding_exists(inst, node.a, node.b, i, j, scope));
        }
    }
    CHECK(checked == 25);
}

TEST_CASE("tree pipeline handles endpoint-sharing children") {
    // (1,5) parent with children (1,3) and (3,5): B^(1,1) and B^(5,5)
    // diagonal factors appear, and the shared endpoint 3 joins through the
    // product
    const Instance inst = simple_instance(
        "abcabca", "abcba",
        {{1, 5, SemilinearSet::all()}, {1, 3, SemilinearSet::all()},
         {3, 5, SemilinearSet::all()}});
    const MatchResult viaTree = match_tree_matmul(inst);
    const MatchResult viaOracle = oracle_match(inst);
    CHECK(viaTree.matched == viaOracle.matched);
    CHECK(viaTree.stats.multiplications == 4); // two children of the real root
}

TEST_CASE("joining and constraining agree with the oracle definition") {
    testutil::Rng rng(35);
    for (int round = 0; round < 15; ++round) {
        const Instance inst =
            testutil::random_instance(rng, {.max_n = 10, .max_m = 5, .max_constraints = 0});
        const Word& w = inst.text();
        const Word& p = inst.pattern();
        if (p.size() < 3) continue;
        const Pos s = 1, t = static_cast<Pos>(1 + p.size() / 2), u = static_cast<Pos>(p.size());
        // joining through the shared midpoint, unconstrained
        const BoolMatrix joined = multiply(build_B(w, p, s, t), build_B(w, p, t, u));
        for (Pos i = 1; i <= w.size(); ++i)
            for (Pos j = 1; j <= w.size(); ++j)
                REQUIRE(joined.get(i - 1, j - 1) ==
                        testutil::pinned_embedding_exists(inst, s, u, i, j, {}));
    }
    // adding one constraint: B^(a,b) AND mask(C)
    for (int round = 0; round < 15; ++round) {
        const Instance inst = testutil::random_instance(
            rng, {.max_n = 10, .max_m = 5, .max_constraints = 1});
        if (inst.constraints().empty()) continue;
        const auto& c = inst.constraints()[0];
        const BoolMatrix constrained = and_elementwise(
            build_B(inst.text(), inst.pattern(), c.i, c.j), mask(c, inst.text()));
        for (Pos i = 1; i <= inst.n(); ++i)
            for (Pos j = 1; j <= inst.n(); ++j)
                REQUIRE(constrained.get(i - 1, j - 1) ==
                        testutil::pinned_embedding_exists(inst, c.i, c.j, i, j, {0}));
    }
}

TEST_CASE("match_tree_matmul on the worked example") {
    const MatchResult r = match_tree_matmul(testutil::worked_example());
    CHECK(r.matched);
    CHECK(r.stats.multiplications == 6); // four nodes, real root, 2 * 3
}

TEST_CASE("match_tree_matmul rejects intersecting sets") {
    const Instance inst = simple_instance(
        "xyzyxxyzy", "xyzyx",
        {{1, 4, SemilinearSet::all()}, {3, 5, SemilinearSet::all()}});
    CHECK_THROWS_AS(match_tree_matmul(inst), UnsupportedStructure);
}

TEST_CASE("match_tree_matmul multiplication count is pinned to the tree size") {
    testutil::Rng rng(36);
    for (int round = 0; round < 40; ++round) {
        const Instance inst = testutil::random_instance(
            rng, {.max_n = 16, .max_m = 7, .force_non_intersecting = true});
        if (inst.m() < 2) continue;
        const ConstraintTree tree =
            build_tree(inst.constraints(), static_cast<Pos>(inst.m()), inst.n());
        const MatchResult r = match_tree_matmul(inst);
        REQUIRE(r.stats.multiplications == 2 * (tree.node_count() - 1));
    }
}

TEST_CASE("match_tuple_enum") {
    SUBCASE("worked example restricted to its length constraints") {
        const Instance inst = simple_instance(
            "abcbcabcabac", "acaba",
            {{2, 3, SemilinearSet::at_least(5)}, {4, 5, SemilinearSet::bounded_range(0, 4)}});
        const MatchResult r = match_tuple_enum(inst);
        CHECK(r.matched);
        REQUIRE(r.witness.has_value());
        CHECK(check_embedding(inst, *r.witness));
    }
    SUBCASE("adjacent embedding via the zero-length gap") {
        const Instance inst =
            simple_instance("ab", "ab", {{1, 2, SemilinearSet::singleton(0)}});
        CHECK(match_tuple_enum(inst).matched);
    }
    SUBCASE("regular constraints are refused") {
        Instance inst = testutil::worked_example();
        CHECK_THROWS_AS(match_tuple_enum(inst), UnsupportedConstraint);
    }
    SUBCASE("constraint count guard") {
        const SemilinearSet any = SemilinearSet::all();
        const Instance inst = simple_instance("aaaaaa", "aaaaa",
                                              {{1, 2, any}, {2, 3, any}, {3, 4, any},
                                               {4, 5, any}});
        CHECK_THROWS_AS(match_tuple_enum(inst), TooLarge);
        MatchOptions wider;
        wider.tuple_enum_max_constraints = 8;
        CHECK(match_tuple_enum(inst, wider).matched);
    }
}

TEST_CASE("match_nfa_product basics") {
    SUBCASE("no constraints is the plain subsequence test") {
        CHECK(match_nfa_product(simple_instance("abacbba", "aba")).matched);
        CHECK_FALSE(match_nfa_product(simple_instance("aab", "ba")).matched);
    }
    SUBCASE("worked example, mixed constraints compiled") {
        CHECK(match_nfa_product(testutil::worked_example()).matched);
    }
    SUBCASE("macro-state budget") {
        MatchOptions opts;
        opts.nfa_state_budget = 2;
        CHECK_THROWS_AS(match_nfa_product(testutil::worked_example(), opts), BudgetExhausted);
    }
}

TEST_CASE("match_vsn_dp basics") {
    SUBCASE("worked example under the natural ordering") {
        const MatchResult r = match_vsn_dp(testutil::worked_example(), {},
                                           std::vector<Pos>{1, 2, 3, 4, 5});
        CHECK(r.matched);
        REQUIRE(r.witness.has_value());
        CHECK(check_embedding(testutil::worked_example(), *r.witness));
    }
    SUBCASE("order violation is caught by the trivial consecutive edge") {
        CHECK_FALSE(match_vsn_dp(simple_instance("ba", "ab")).matched);
    }
    SUBCASE("single-position pattern") {
        const MatchResult r = match_vsn_dp(simple_instance("xyz", "y"));
        CHECK(r.matched);
        CHECK(r.witness->targets == std::vector<Pos>{2});
    }
    SUBCASE("any permutation works, wide ones just cost more") {
        testutil::Rng rng(39);
        for (int round = 0; round < 40; ++round) {
            const Instance inst = testutil::random_instance(rng, {.max_n = 16, .max_m = 5});
            const bool expect = oracle_match(inst).matched;
            std::vector<Pos> order(inst.m());
            for (Pos v = 1; v <= inst.m(); ++v) order[v - 1] = v;
            std::shuffle(order.begin(), order.end(), rng);
            const MatchResult r = match_vsn_dp(inst, {}, order);
            REQUIRE(r.matched == expect);
            if (r.matched) REQUIRE(check_embedding(inst, *r.witness));
        }
    }
    SUBCASE("orderings must be permutations") {
        const Instance inst = simple_instance("abab", "ab");
        CHECK_THROWS_AS(match_vsn_dp(inst, {}, std::vector<Pos>{1}), std::invalid_argument);
        CHECK_THROWS_AS(match_vsn_dp(inst, {}, std::vector<Pos>{1, 1}), std::invalid_argument);
        CHECK_THROWS_AS(match_vsn_dp(inst, {}, std::vector<Pos>{1, 7}), std::invalid_argument);
    }
}

TEST_CASE("all applicable matchers agree with the oracle") {
    testutil::Rng rng(37);
    int agreements = 0;
    for (int round = 0; round < 400; ++round) {
        const Instance inst = testutil::random_instance(rng, {.max_n = 24, .max_m = 6});
        const bool expect = oracle_match(inst).matched;

        const MatchResult dp = match_vsn_dp(inst);
        REQUIRE(dp.matched == expect);
        if (dp.matched) REQUIRE(check_embedding(inst, *dp.witness));

        if (is_non_intersecting(inst.constraints()))
            REQUIRE(match_tree_matmul(inst).matched == expect);

        const auto& cs = inst.constraints().constraints();
        const bool all_semilinear =
            std::all_of(cs.begin(), cs.end(), [](const auto& c) { return c.is_semilinear(); });
        if (all_semilinear && cs.size() <= 3) {
            const MatchResult te = match_tuple_enum(inst);
            REQUIRE(te.matched == expect);
            if (te.matched) REQUIRE(check_embedding(inst, *te.witness));
        }

        REQUIRE(match_nfa_product(inst).matched == expect);
        ++agreements;
    }
    CHECK(agreements == 400);
}

TEST_CASE("dispatch routing") {
    SUBCASE("non-intersecting goes to the tree pipeline") {
        const MatchResult r = dispatch(testutil::worked_example());
        CHECK(r.algorithm == MatchAlgorithm::TreeMatmul);
        CHECK(r.matched);
    }
    SUBCASE("intersecting with small width goes to the boundary DP") {
        const Instance inst = simple_instance(
            "xyzyxzy", "xyzyx",
            {{1, 4, SemilinearSet::all()}, {3, 5, SemilinearSet::all()}});
        const MatchResult r = dispatch(inst);
        CHECK(r.algorithm == MatchAlgorithm::VsnDp);
    }
    SUBCASE("dense intersecting mixed constraints fall back to the oracle") {
        // overlapping chords, mixed types; the cycle forces width >= 2, so a
        // limit of 1 shuts the DP gate
        std::vector<GapConstraint> cs;
        const Pos m = 12;
        for (Pos i = 1; i + 6 <= m; ++i)
            cs.push_back({i, static_cast<Pos>(i + 6), SemilinearSet::all()});
        Alphabet alphabet;
        alphabet.intern("a");
        alphabet.intern("b");
        Dfa anything(1, 2, 0, {0});
        anything.add_transition(0, 0, 0);
        anything.add_transition(0, 1, 0);
        cs.push_back({2, 10, anything});
        testutil::Rng rng(38);
        Instance inst(testutil::random_word(rng, 20, 2), testutil::random_word(rng, m, 2),
                      ConstraintSet(std::move(cs)), std::move(alphabet));
        MatchOptions opts;
        opts.vsn_limit = 1;
        const MatchResult r = dispatch(inst, opts);
        CHECK(r.algorithm == MatchAlgorithm::Oracle);
        CHECK(r.matched == oracle_match(inst).matched);
    }
}
