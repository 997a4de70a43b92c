#pragma once

#include <cstdint>
#include <vector>

namespace gapmatch {

/// Bit-packed square boolean matrix. Rows are contiguous 64-bit words; all
/// bits beyond column n stay zero through every operation.
class BoolMatrix {
public:
    explicit BoolMatrix(std::size_t n);

    static BoolMatrix identity(std::size_t n);
    static BoolMatrix full(std::size_t n);

    std::size_t dim() const { return n_; }
    std::size_t words_per_row() const { return words_; }

    bool get(std::size_t row, std::size_t col) const {
        return (bits_[row * words_ + (col >> 6)] >> (col & 63)) & 1;
    }
    void set(std::size_t row, std::size_t col, bool value = true) {
        std::uint64_t& w = bits_[row * words_ + (col >> 6)];
        const std::uint64_t m = std::uint64_t{1} << (col & 63);
        if (value) w |= m; else w &= ~m;
    }

    std::uint64_t* row(std::size_t r) { return bits_.data() + r * words_; }
    const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * words_; }

    /// OR the given row of other into row r of this.
    void or_row(std::size_t r, const BoolMatrix& other, std::size_t other_row);

    std::size_t count() const;

    bool operator==(const BoolMatrix&) const = default;

private:
    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

/// Boolean matrix product: C[i][j] = OR_k (A[i][k] AND B[k][j]). Row-major
/// word-parallel: for every set bit k of A's row i, OR B's row k into C's
/// row i. O(n^3 / 64). Dimension mismatch throws std::invalid_argument.
BoolMatrix multiply(const BoolMatrix& a, const BoolMatrix& b);

/// Elementwise AND. Dimension mismatch throws std::invalid_argument.
BoolMatrix and_elementwise(const BoolMatrix& a, const BoolMatrix& b);

/// True iff some entry is set; word-level OR reduction.
bool any_true(const BoolMatrix& a);

} // namespace gapmatch
