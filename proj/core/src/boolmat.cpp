#include "gapmatch/boolmat.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <vector>

namespace gapmatch {

namespace {

// GAPMATCH_THREADS > 1 spreads multiply across row blocks; the result is
// bit-identical either way.
unsigned worker_count() {
    static const unsigned value = [] {
        if (const char* env = std::getenv("GAPMATCH_THREADS")) {
            const long parsed = std::strtol(env, nullptr, 10);
            if (parsed > 0) return static_cast<unsigned>(parsed);
        }
        return 1u;
    }();
    return value;
}

} // namespace

BoolMatrix::BoolMatrix(std::size_t n)
    : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

BoolMatrix BoolMatrix::identity(std::size_t n) {
    BoolMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BoolMatrix BoolMatrix::full(std::size_t n) {
    BoolMatrix m(n);
    if (n == 0) return m;
    const std::uint64_t tail = (n % 64 == 0) ? ~std::uint64_t{0}
                                             : ((std::uint64_t{1} << (n % 64)) - 1);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t* r = m.row(i);
        for (std::size_t w = 0; w + 1 < m.words_; ++w) r[w] = ~std::uint64_t{0};
        r[m.words_ - 1] = tail;
    }
    return m;
}

void BoolMatrix::or_row(std::size_t r, const BoolMatrix& other, std::size_t other_row) {
    std::uint64_t* dst = row(r);
    const std::uint64_t* src = other.row(other_row);
    for (std::size_t w = 0; w < words_; ++w) dst[w] |= src[w];
}

std::size_t BoolMatrix::count() const {
    std::size_t c = 0;
    for (std::uint64_t w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

BoolMatrix multiply(const BoolMatrix& a, const BoolMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("multiply: dimension mismatch");
    const std::size_t n = a.dim();
    const std::size_t words = a.words_per_row();
    BoolMatrix c(n);

    auto rows = [&](std::size_t from, std::size_t to) {
        for (std::size_t i = from; i < to; ++i) {
            const std::uint64_t* arow = a.row(i);
            std::uint64_t* crow = c.row(i);
            for (std::size_t w = 0; w < words; ++w) {
                std::uint64_t bitsw = arow[w];
                while (bitsw) {
                    const std::size_t k =
                        w * 64 + static_cast<std::size_t>(std::countr_zero(bitsw));
                    bitsw &= bitsw - 1;
                    const std::uint64_t* brow = b.row(k);
                    for (std::size_t v = 0; v < words; ++v) crow[v] |= brow[v];
                }
            }
        }
    };

    const unsigned workers = worker_count();
    if (workers <= 1 || n < 256) {
        rows(0, n);
        return c;
    }
    std::vector<std::thread> pool;
    const std::size_t block = (n + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
        const std::size_t from = t * block;
        if (from >= n) break;
        pool.emplace_back(rows, from, std::min(n, from + block));
    }
    for (auto& worker : pool) worker.join();
    return c;
}

BoolMatrix and_elementwise(const BoolMatrix& a, const BoolMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("and_elementwise: dimension mismatch");
    BoolMatrix c = a;
    const std::size_t total = a.dim() * a.words_per_row();
    std::uint64_t* cw = c.row(0);
    const std::uint64_t* bw = b.row(0);
    for (std::size_t w = 0; w < total; ++w) cw[w] &= bw[w];
    return c;
}

bool any_true(const BoolMatrix& a) {
    const std::size_t total = a.dim() * a.words_per_row();
    const std::uint64_t* w = a.row(0);
    std::uint64_t acc = 0;
    for (std::size_t v = 0; v < total; ++v) acc |= w[v];
    return acc != 0;
}

} // namespace gapmatch
