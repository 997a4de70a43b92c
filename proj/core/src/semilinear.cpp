#include "gapmatch/semilinear.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace gapmatch {

LinearSet::LinearSet(std::uint64_t offset, std::vector<std::uint64_t> periods)
    : offset_(offset), periods_(std::move(periods)) {
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t p : periods_) {
        if (p == 0) throw std::invalid_argument("LinearSet: periods must be positive");
        if (!seen.insert(p).second)
            throw std::invalid_argument("LinearSet: periods must be pairwise distinct");
    }
}

SemilinearSet::SemilinearSet(std::vector<LinearSet> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("SemilinearSet: needs at least one linear part");
}

std::size_t SemilinearSet::size() const {
    std::size_t total = 0;
    for (const auto& p : parts_) total += p.size();
    return total;
}

SemilinearSet SemilinearSet::singleton(std::uint64_t x) {
    return SemilinearSet({LinearSet(x)});
}

SemilinearSet SemilinearSet::at_least(std::uint64_t lo) {
    return SemilinearSet({LinearSet(lo, {1})});
}

SemilinearSet SemilinearSet::bounded_range(std::uint64_t lo, std::uint64_t hi) {
    if (hi < lo) throw std::invalid_argument("SemilinearSet::bounded_range: hi < lo");
    std::vector<LinearSet> parts;
    parts.reserve(hi - lo + 1);
    for (std::uint64_t x = lo; x <= hi; ++x) parts.emplace_back(x);
    return SemilinearSet(std::move(parts));
}

SemilinearSet SemilinearSet::all() {
    return SemilinearSet({LinearSet(0, {1})});
}

namespace {

bool linear_contains(const LinearSet& l, std::uint64_t x) {
    if (x < l.offset()) return false;
    const std::uint64_t rest = x - l.offset();
    if (l.periods().empty()) return rest == 0;
    if (rest == 0) return true;
    if (l.periods().size() == 1) return rest % l.periods()[0] == 0;
    // Bounded coin problem over [0, rest].
    std::vector<char> reach(rest + 1, 0);
    reach[0] = 1;
    for (std::uint64_t v = 0; v <= rest; ++v) {
        if (!reach[v]) continue;
        for (std::uint64_t p : l.periods())
            if (p <= rest - v) reach[v + p] = 1;
        if (reach[rest]) return true;
    }
    return reach[rest];
}

} // namespace

bool contains(const SemilinearSet& s, std::uint64_t x) {
    for (const auto& part : s.parts())
        if (linear_contains(part, x)) return true;
    return false;
}

MembershipTable::MembershipTable(std::vector<bool> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) throw std::invalid_argument("MembershipTable: empty bit vector");
}

MembershipTable build_table(const SemilinearSet& s, std::size_t n, std::uint64_t* ops) {
    std::vector<bool> combined(n + 1, false);
    std::vector<bool> part_bits(n + 1);
    for (const auto& part : s.parts()) {
        std::fill(part_bits.begin(), part_bits.end(), false);
        if (part.offset() <= n) part_bits[part.offset()] = true;
        if (!part.periods().empty()) {
            for (std::size_t v = part.offset(); v <= n; ++v) {
                if (!part_bits[v]) continue;
                for (std::uint64_t p : part.periods()) {
                    if (ops) ++*ops;
                    if (p <= n - v) part_bits[v + p] = true;
                }
            }
        }
        for (std::size_t v = 0; v <= n; ++v) {
            if (ops) ++*ops;
            if (part_bits[v]) combined[v] = true;
        }
    }
    return MembershipTable(std::move(combined));
}

bool table_query(const MembershipTable& t, std::uint64_t x) {
    if (x > t.limit())
        throw std::invalid_argument("table_query: " + std::to_string(x) + " outside [0, " +
                                    std::to_string(t.limit()) + "]");
    return t.query_unchecked(x);
}

SemilinearSet restrict_to(const SemilinearSet& s, std::size_t n) {
    const MembershipTable t = build_table(s, n);
    std::vector<LinearSet> parts;
    for (std::size_t x = 0; x <= n; ++x)
        if (t.query_unchecked(x)) parts.emplace_back(x);
    if (parts.empty()) {
        // Empty intersection; keep a single unreachable offset so the set
        // representation stays well-formed.
        parts.emplace_back(static_cast<std::uint64_t>(n) + 1);
    }
    return SemilinearSet(std::move(parts));
}

} // namespace gapmatch
