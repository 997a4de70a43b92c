#pragma once

#include <stdexcept>
#include <string>

namespace gapmatch {

/// A matcher ran out of its caller-supplied work budget. Distinct from a
/// negative answer: the instance may still be matchable.
class BudgetExhausted : public std::runtime_error {
public:
    explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// An input exceeds a guard that keeps an exact algorithm tractable
/// (e.g. too many constraints for tuple enumeration, too many pattern
/// positions for the exact ordering search).
class TooLarge : public std::runtime_error {
public:
    explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

/// A matcher was handed a constraint type it does not support.
class UnsupportedConstraint : public std::runtime_error {
public:
    explicit UnsupportedConstraint(const std::string& what) : std::runtime_error(what) {}
};

/// A matcher was handed a constraint set whose shape it does not support
/// (e.g. intersecting constraints for the tree pipeline).
class UnsupportedStructure : public std::runtime_error {
public:
    explicit UnsupportedStructure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gapmatch
