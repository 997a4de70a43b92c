#include <doctest.h>

#include "gapmatch/boolmat.hpp"
#include "testutil.hpp"

using namespace gapmatch;

namespace {

BoolMatrix random_matrix(testutil::Rng& rng, std::size_t n, double density = 0.3) {
    BoolMatrix m(n);
    std::bernoulli_distribution coin(density);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (coin(rng)) m.set(i, j);
    return m;
}

BoolMatrix or_elementwise(const BoolMatrix& a, const BoolMatrix& b) {
    BoolMatrix c = a;
    for (std::size_t i = 0; i < a.dim(); ++i) c.or_row(i, b, i);
    return c;
}

bool padding_clean(const BoolMatrix& m) {
    if (m.dim() % 64 == 0) return true;
    const std::uint64_t tail_mask = ~((std::uint64_t{1} << (m.dim() % 64)) - 1);
    for (std::size_t i = 0; i < m.dim(); ++i)
        if (m.row(i)[m.words_per_row() - 1] & tail_mask) return false;
    return true;
}

} // namespace

TEST_CASE("identity and absorbing elements") {
    testutil::Rng rng(1);
    const BoolMatrix a = random_matrix(rng, 70);
    CHECK(multiply(BoolMatrix::identity(70), a) == a);
    CHECK(multiply(a, BoolMatrix::identity(70)) == a);
    CHECK(multiply(a, BoolMatrix(70)) == BoolMatrix(70));
    CHECK(and_elementwise(a, BoolMatrix::full(70)) == a);
    CHECK(and_elementwise(a, BoolMatrix(70)) == BoolMatrix(70));
}

TEST_CASE("multiply equals the naive triple loop") {
    testutil::Rng rng(2);
    for (std::size_t n : {1u, 7u, 63u, 64u, 65u, 100u}) {
        const BoolMatrix a = random_matrix(rng, n);
        const BoolMatrix b = random_matrix(rng, n);
        CHECK(multiply(a, b) == testutil::naive_multiply(a, b));
    }
    CHECK_THROWS_AS(multiply(BoolMatrix(3), BoolMatrix(4)), std::invalid_argument);
    CHECK_THROWS_AS(and_elementwise(BoolMatrix(3), BoolMatrix(4)), std::invalid_argument);
}

TEST_CASE("and_elementwise equals the per-entry loop") {
    testutil::Rng rng(3);
    const BoolMatrix a = random_matrix(rng, 90);
    const BoolMatrix b = random_matrix(rng, 90);
    const BoolMatrix c = and_elementwise(a, b);
    for (std::size_t i = 0; i < 90; ++i)
        for (std::size_t j = 0; j < 90; ++j)
            REQUIRE(c.get(i, j) == (a.get(i, j) && b.get(i, j)));
}

TEST_CASE("any_true") {
    BoolMatrix m(50);
    CHECK_FALSE(any_true(m));
    m.set(31, 49);
    CHECK(any_true(m));
    testutil::Rng rng(4);
    for (int round = 0; round < 20; ++round) {
        const BoolMatrix a = random_matrix(rng, 33, 0.02);
        CHECK(any_true(a) == (a.count() > 0));
    }
}

TEST_CASE("multiply is associative on random triples") {
    testutil::Rng rng(5);
    for (int round = 0; round < 15; ++round) {
        const std::size_t n = testutil::pick(rng, 1, 32);
        const BoolMatrix a = random_matrix(rng, n);
        const BoolMatrix b = random_matrix(rng, n);
        const BoolMatrix c = random_matrix(rng, n);
        REQUIRE(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
}

TEST_CASE("multiply distributes over elementwise OR") {
    testutil::Rng rng(6);
    for (int round = 0; round < 15; ++round) {
        const std::size_t n = testutil::pick(rng, 1, 32);
        const BoolMatrix a = random_matrix(rng, n);
        const BoolMatrix b = random_matrix(rng, n);
        const BoolMatrix c = random_matrix(rng, n);
        REQUIRE(multiply(a, or_elementwise(b, c)) ==
                or_elementwise(multiply(a, b), multiply(a, c)));
    }
}

TEST_CASE("padding bits stay zero through every operation") {
    testutil::Rng rng(7);
    for (std::size_t n : {1u, 5u, 63u, 65u, 127u}) {
        const BoolMatrix a = random_matrix(rng, n, 0.5);
        const BoolMatrix b = random_matrix(rng, n, 0.5);
        CHECK(padding_clean(a));
        CHECK(padding_clean(BoolMatrix::full(n)));
        CHECK(padding_clean(multiply(a, b)));
        CHECK(padding_clean(and_elementwise(a, BoolMatrix::full(n))));
        CHECK(padding_clean(or_elementwise(a, b)));
    }
}
