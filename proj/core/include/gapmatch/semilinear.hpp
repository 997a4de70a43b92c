#pragma once

#include <cstdint>
#include <vector>

namespace gapmatch {

/// L(offset; p1, ..., pl) = { offset + sum k_i * p_i : k_i >= 0 }.
/// Periods are positive and pairwise distinct; size(L) = l + 1.
class LinearSet {
public:
    LinearSet(std::uint64_t offset, std::vector<std::uint64_t> periods = {});

    std::uint64_t offset() const { return offset_; }
    const std::vector<std::uint64_t>& periods() const { return periods_; }
    std::size_t size() const { return periods_.size() + 1; }

    bool operator==(const LinearSet&) const = default;

private:
    std::uint64_t offset_;
    std::vector<std::uint64_t> periods_;
};

/// Finite union of linear sets; size(S) is the number of integers used to
/// define it.
class SemilinearSet {
public:
    explicit SemilinearSet(std::vector<LinearSet> parts);

    const std::vector<LinearSet>& parts() const { return parts_; }
    std::size_t size() const;

    /// Singleton {x}.
    static SemilinearSet singleton(std::uint64_t x);
    /// { x : x >= lo }, i.e. L(lo; 1).
    static SemilinearSet at_least(std::uint64_t lo);
    /// { lo, lo+1, ..., hi } as an explicit union of singletons.
    static SemilinearSet bounded_range(std::uint64_t lo, std::uint64_t hi);
    /// All of N0, i.e. L(0; 1).
    static SemilinearSet all();

    bool operator==(const SemilinearSet&) const = default;

private:
    std::vector<LinearSet> parts_;
};

/// Direct membership test, no precomputation: a bounded coin-problem dynamic
/// program over [0, x].
bool contains(const SemilinearSet& s, std::uint64_t x);

/// Precomputed membership over [0, n]: bits[x] iff x in S.
class MembershipTable {
public:
    MembershipTable(std::vector<bool> bits);

    std::size_t limit() const { return bits_.size() - 1; } // largest queryable x
    bool query_unchecked(std::uint64_t x) const { return bits_[x]; }

private:
    std::vector<bool> bits_;
};

/// Builds the membership table for S over [0, n] by one forward marking
/// sweep per linear part, OR-combined. O(n * size(S)). When ops is non-null
/// it is incremented once per inner marking step, so tests can assert the
/// linear work bound without timing anything.
MembershipTable build_table(const SemilinearSet& s, std::size_t n, std::uint64_t* ops = nullptr);

/// Constant-time lookup; x outside [0, n] throws std::invalid_argument.
bool table_query(const MembershipTable& t, std::uint64_t x);

/// S restricted to [0, n], materialised as singletons (at most n + 1 of
/// them). Optional normalisation pass; nothing applies it implicitly.
SemilinearSet restrict_to(const SemilinearSet& s, std::size_t n);

} // namespace gapmatch
