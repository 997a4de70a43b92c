#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gapmatch {

/// Dense internal alphabet: symbols are 0..sigma-1 for a given instance.
using Symbol = std::uint32_t;

/// 1-based position into a text or pattern. All public interfaces speak
/// 1-based positions; 0-based storage never leaks out.
using Pos = std::uint32_t;

/// A string over the internal alphabet. Used for both texts and patterns.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }

    /// Symbol at 1-based position pos. Throws std::invalid_argument when out
    /// of range.
    Symbol at(Pos pos) const;

    /// 0-based raw access, unchecked.
    Symbol operator[](std::size_t idx) const { return symbols_[idx]; }

    std::span<const Symbol> symbols() const { return symbols_; }

    /// Factor w[i..j] with 1-based inclusive bounds; j == i-1 yields the
    /// empty word. Anything else out of range throws std::invalid_argument.
    Word slice(Pos i, Pos j) const;

    bool operator==(const Word&) const = default;

private:
    std::vector<Symbol> symbols_;
};

/// Bidirectional mapping between external tokens (characters or longer
/// strings) and dense internal symbols.
class Alphabet {
public:
    /// Returns the symbol for token, interning it if unseen.
    Symbol intern(std::string_view token);

    std::optional<Symbol> find(std::string_view token) const;

    const std::string& token(Symbol s) const;

    std::size_t size() const { return tokens_.size(); }

    /// Interns every character of text as a single-character token and
    /// returns the encoded word.
    Word encode_chars(std::string_view text);

    /// Renders a word back through the token map.
    std::string decode(const Word& w) const;

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> tokens_;
    std::map<std::string, Symbol, std::less<>> index_;
};

/// A (partial or full) embedding: strictly increasing 1-based text positions,
/// targets[t-1] = e(t).
struct Embedding {
    std::vector<Pos> targets;

    std::size_t size() const { return targets.size(); }
    Pos at(Pos t) const { return targets.at(t - 1); }

    /// True when the targets are strictly increasing and within [1, n].
    bool well_formed(std::size_t n) const;

    bool operator==(const Embedding&) const = default;
};

} // namespace gapmatch
