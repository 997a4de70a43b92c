#include <doctest.h>

#include "gapmatch/core.hpp"
#include "gapmatch/errors.hpp"
#include "testutil.hpp"
#include "worked_example.hpp"

using namespace gapmatch;

TEST_CASE("gap extraction") {
    Alphabet alphabet;
    const Word w = alphabet.encode_chars("baabbcaccab");
    const Embedding e{{2, 5, 7, 9}};

    CHECK(alphabet.decode(gap(w, e, 1, 2)) == "ab");
    CHECK(alphabet.decode(gap(w, e, 2, 4)) == "cac");
    CHECK(alphabet.decode(gap(w, e, 1, 4)) == "abbcac");
    CHECK(gap(w, Embedding{{2, 3}}, 1, 2).empty()); // adjacent images

    CHECK_THROWS_AS(gap(w, e, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(gap(w, e, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(gap(w, e, 1, 5), std::invalid_argument);
}

TEST_CASE("gap lengths compose across an intermediate image") {
    testutil::Rng rng(11);
    for (int round = 0; round < 50; ++round) {
        const Word w = testutil::random_word(rng, testutil::pick(rng, 3, 30), 3);
        // random strictly increasing embedding of length 3..5
        const std::size_t k = testutil::pick(rng, 3, std::min<std::size_t>(5, w.size()));
        std::vector<Pos> targets;
        for (Pos pos = 1; pos <= w.size() && targets.size() < k; ++pos)
            if (testutil::pick(rng, 0, 1) || w.size() - pos < k - targets.size())
                targets.push_back(pos);
        const Embedding e{targets};
        const Pos i = 1, j = static_cast<Pos>(testutil::pick(rng, 2, k - 1));
        const Pos l = static_cast<Pos>(k);
        REQUIRE(gap(w, e, i, l).size() == gap(w, e, i, j).size() + 1 + gap(w, e, j, l).size());
    }
}

TEST_CASE("constraint set validation") {
    const SemilinearSet any = SemilinearSet::all();
    CHECK_THROWS_AS(ConstraintSet({{2, 2, any}}), std::invalid_argument);
    CHECK_THROWS_AS(ConstraintSet({{3, 2, any}}), std::invalid_argument);
    CHECK_THROWS_AS(ConstraintSet({{1, 3, any}, {1, 3, any}}), std::invalid_argument);
    const ConstraintSet ok({{1, 3, any}, {1, 4, any}});
    CHECK(ok.count() == 2);
}

TEST_CASE("instance validation") {
    Alphabet alphabet;
    const Word text = alphabet.encode_chars("abc");
    const Word pattern = alphabet.encode_chars("ac");
    CHECK_THROWS_AS(Instance(text, Word{}, ConstraintSet{}, alphabet), std::invalid_argument);
    CHECK_THROWS_AS(Instance(pattern, text, ConstraintSet{}, alphabet), std::invalid_argument);
    CHECK_THROWS_AS(Instance(text, pattern, ConstraintSet({{1, 3, SemilinearSet::all()}}),
                             alphabet),
                    std::invalid_argument); // j beyond pattern
}

TEST_CASE("check_embedding on the worked example") {
    const Instance inst = testutil::worked_example();
    const Embedding e{{1, 3, 6, 7, 11}};
    const Embedding e_prime{{1, 3, 9, 10, 11}};

    CHECK_FALSE(check_embedding(inst, e)); // (2,3)-gap has length 2 < 5
    CHECK(check_embedding(inst, e_prime));
    CHECK(check_embedding(testutil::worked_example_without_23(), e));

    // malformed embeddings answer false
    CHECK_FALSE(check_embedding(inst, Embedding{{1, 3, 9, 10}}));
    CHECK_FALSE(check_embedding(inst, Embedding{{3, 1, 9, 10, 11}}));
    CHECK_FALSE(check_embedding(inst, Embedding{{1, 3, 9, 10, 99}}));
    CHECK_FALSE(check_embedding(inst, Embedding{{2, 3, 9, 10, 11}})); // w[2] != p[1]
}

TEST_CASE("check_embedding with no constraints accepts any valid subsequence embedding") {
    Alphabet alphabet;
    const Word w = alphabet.encode_chars("abacbba");
    const Word p = alphabet.encode_chars("aba");
    const Instance inst(w, p, ConstraintSet{}, alphabet);
    CHECK(check_embedding(inst, Embedding{{1, 2, 3}}));
    CHECK(check_embedding(inst, Embedding{{3, 5, 7}}));
    CHECK_FALSE(check_embedding(inst, Embedding{{1, 2, 4}}));
}

TEST_CASE("oracle finds the smallest witness of the worked example") {
    const MatchResult r = oracle_match(testutil::worked_example());
    REQUIRE(r.matched);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->targets == std::vector<Pos>{1, 3, 9, 10, 11});
}

TEST_CASE("oracle on plain subsequences is the greedy embedding") {
    Alphabet alphabet;
    const Word w = alphabet.encode_chars("abacbba");
    const Word p = alphabet.encode_chars("aaa");
    const Instance inst(w, p, ConstraintSet{}, alphabet);
    const MatchResult r = oracle_match(inst);
    REQUIRE(r.matched);
    CHECK(r.witness->targets == std::vector<Pos>{1, 3, 7});
}

TEST_CASE("oracle rejects when the gap cannot fit") {
    Alphabet alphabet;
    const Word w = alphabet.encode_chars("aab");
    const Word p = alphabet.encode_chars("ba");
    // no b before an a anyway, and the length-5 gap cannot fit in a 3-letter text
    const Instance inst(w, p, ConstraintSet({{1, 2, SemilinearSet::singleton(5)}}), alphabet);
    CHECK_FALSE(oracle_match(inst).matched);
}

TEST_CASE("oracle budget exhaustion is an error, not a verdict") {
    Alphabet alphabet;
    const Symbol a = alphabet.intern("a");
    const Instance inst(Word(std::vector<Symbol>(60, a)), Word(std::vector<Symbol>(10, a)),
                        ConstraintSet({{1, 10, SemilinearSet::singleton(60)}}), alphabet);
    CHECK_THROWS_AS(oracle_match(inst, 1000), BudgetExhausted);
}

TEST_CASE("oracle witness always validates") {
    testutil::Rng rng(12);
    for (int round = 0; round < 120; ++round) {
        const Instance inst = testutil::random_instance(rng, {.max_n = 24, .max_m = 6});
        const MatchResult r = oracle_match(inst);
        if (r.matched) {
            REQUIRE(r.witness.has_value());
            REQUIRE(check_embedding(inst, *r.witness));
        }
    }
}

TEST_CASE("removing a constraint keeps a positive instance positive") {
    testutil::Rng rng(13);
    int seen = 0;
    for (int round = 0; round < 150 && seen < 40; ++round) {
        const Instance inst = testutil::random_instance(rng, {.max_n = 20, .max_m = 5});
        if (inst.constraints().empty() || !oracle_match(inst).matched) continue;
        ++seen;
        for (std::size_t drop = 0; drop < inst.constraints().count(); ++drop) {
            std::vector<GapConstraint> kept;
            for (std::size_t c = 0; c < inst.constraints().count(); ++c)
                if (c != drop) kept.push_back(inst.constraints()[c]);
            Alphabet alphabet = inst.alphabet();
            const Instance smaller(inst.text(), inst.pattern(), ConstraintSet(std::move(kept)),
                                   std::move(alphabet));
            REQUIRE(oracle_match(smaller).matched);
        }
    }
    CHECK(seen >= 10);
}

TEST_CASE("oracle equals greedy on constraint-free instances") {
    testutil::Rng rng(14);
    for (int round = 0; round < 100; ++round) {
        Instance inst = testutil::random_instance(rng, {.max_n = 30, .max_m = 6,
                                                        .max_constraints = 0});
        REQUIRE(oracle_match(inst).matched ==
                testutil::greedy_subsequence(inst.text(), inst.pattern()));
    }
}
