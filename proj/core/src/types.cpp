#include "gapmatch/types.hpp"

#include <stdexcept>

namespace gapmatch {

Symbol Word::at(Pos pos) const {
    if (pos < 1 || pos > symbols_.size())
        throw std::invalid_argument("Word::at: position " + std::to_string(pos) +
                                    " out of range [1, " + std::to_string(symbols_.size()) + "]");
    return symbols_[pos - 1];
}

Word Word::slice(Pos i, Pos j) const {
    if (j + 1 == i) return Word{};
    if (i < 1 || j < i || j > symbols_.size())
        throw std::invalid_argument("Word::slice: bad factor bounds [" + std::to_string(i) +
                                    ", " + std::to_string(j) + "]");
    return Word(std::vector<Symbol>(symbols_.begin() + (i - 1), symbols_.begin() + j));
}

Symbol Alphabet::intern(std::string_view token) {
    auto it = index_.find(token);
    if (it != index_.end()) return it->second;
    const Symbol s = static_cast<Symbol>(tokens_.size());
    tokens_.emplace_back(token);
    index_.emplace(std::string(token), s);
    return s;
}

std::optional<Symbol> Alphabet::find(std::string_view token) const {
    auto it = index_.find(token);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const std::string& Alphabet::token(Symbol s) const {
    if (s >= tokens_.size()) throw std::invalid_argument("Alphabet::token: unknown symbol");
    return tokens_[s];
}

Word Alphabet::encode_chars(std::string_view text) {
    std::vector<Symbol> syms;
    syms.reserve(text.size());
    for (char c : text) syms.push_back(intern(std::string_view(&c, 1)));
    return Word(std::move(syms));
}

std::string Alphabet::decode(const Word& w) const {
    std::string out;
    for (Symbol s : w.symbols()) out += token(s);
    return out;
}

bool Embedding::well_formed(std::size_t n) const {
    Pos prev = 0;
    for (Pos t : targets) {
        if (t <= prev || t > n) return false;
        prev = t;
    }
    return true;
}

} // namespace gapmatch
