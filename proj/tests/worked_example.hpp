#pragma once

// The running example instance: text abcbcabcabac, pattern acaba, with
//   (1, 4)  any gap
//   (1, 5)  gap contains at least two c's   (regular)
//   (2, 3)  gap length >= 5
//   (4, 5)  gap length <= 4

#include "gapmatch/core.hpp"

namespace testutil {

inline gapmatch::Instance worked_example() {
    using namespace gapmatch;
    Alphabet alphabet;
    Word text = alphabet.encode_chars("abcbcabcabac");
    Word pattern = alphabet.encode_chars("acaba");

    const Symbol c = *alphabet.find("c");
    Dfa two_cs(3, 3, 0, {2});
    for (Symbol s = 0; s < 3; ++s) {
        two_cs.add_transition(0, s, s == c ? 1 : 0);
        two_cs.add_transition(1, s, s == c ? 2 : 1);
        two_cs.add_transition(2, s, 2);
    }

    std::vector<GapConstraint> constraints;
    constraints.push_back({1, 4, SemilinearSet::all()});
    constraints.push_back({1, 5, std::move(two_cs)});
    constraints.push_back({2, 3, SemilinearSet::at_least(5)});
    constraints.push_back({4, 5, SemilinearSet::bounded_range(0, 4)});
    return Instance(std::move(text), std::move(pattern), ConstraintSet(std::move(constraints)),
                    std::move(alphabet));
}

/// Same instance without the (2, 3) length constraint.
inline gapmatch::Instance worked_example_without_23() {
    using namespace gapmatch;
    const Instance full = worked_example();
    std::vector<GapConstraint> kept;
    for (const auto& c : full.constraints().constraints())
        if (!(c.i == 2 && c.j == 3)) kept.push_back(c);
    Alphabet alphabet = full.alphabet();
    return Instance(full.text(), full.pattern(), ConstraintSet(std::move(kept)),
                    std::move(alphabet));
}

} // namespace testutil
