#pragma once

#include <optional>
#include <string>

#include "gapmatch/core.hpp"
#include "gapmatch/matchers.hpp"

namespace gapmatch {

/// Raised by parse_instance with a diagnostic naming the offending field.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Instance files are JSON:
///   {
///     "alphabet": ["a", "b", ...]  (optional; pins the symbol numbering),
///     "text": "abcb..."            (or an array of tokens),
///     "pattern": "aca...",
///     "constraints": [
///       {"i": 2, "j": 3, "type": "semilinear",
///        "payload": [{"offset": 5, "periods": [1]}]},
///       {"i": 1, "j": 5, "type": "regular",
///        "payload": {"states": 3, "start": 0, "accepting": [2],
///                     "transitions": [[0, "a", 1], ...]}}
///     ],
///     "metadata": { ... }          (optional, preserved verbatim)
///   }
/// Omitted DFA transitions are undefined (rejecting).
struct InstanceFile {
    Instance instance;
    std::string metadata_json; // "null" when absent
};

InstanceFile parse_instance(const std::string& bytes);

/// Canonical serialisation; parse(serialize(x)) reproduces x exactly.
std::string serialize_instance(const Instance& inst, const std::string& metadata_json = "null");

/// Structure summary as reported by the analyze command.
struct AnalysisReport {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t constraint_count = 0;
    std::size_t gapsize = 0;
    std::size_t total_size = 0;
    bool non_intersecting = false;
    std::optional<std::pair<std::size_t, std::size_t>> intersecting_pair;
    std::size_t relation_counts[3] = {0, 0, 0}; // nested (either way), intersecting, disjoint
    int vsn = -1;                               // -1: not computed
    bool vsn_optimal = false;
    int tree_depth = -1;                        // -1: intersecting, no tree
    std::size_t tree_nodes = 0;
    bool synthetic_root = false;
};

AnalysisReport analyze(const Instance& inst, int vsn_exact_m_limit = 20);

std::string to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

/// Match report: verdict, witness, algorithm and counters, plus a structure
/// summary. Stable across runs on the same input.
std::string report_json(const Instance& inst, const MatchResult& result);
std::string report_text(const Instance& inst, const MatchResult& result);

} // namespace gapmatch
