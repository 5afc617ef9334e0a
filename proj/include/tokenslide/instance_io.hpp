#pragma once

#include "tokenslide/oracle.hpp"
#include "tokenslide/reconfiguration.hpp"

#include <optional>
#include <string>

namespace tokenslide {

// A parsed instance. Interval instances carry a graph built from the listed
// intervals; abstract instances (first token `abstract`) carry an explicit
// edge list and only support the oracle. I and J come back canonicalized.
struct InstanceFile {
    bool abstract = false;
    std::optional<IntervalGraph> graph;
    std::optional<AbstractGraph> agraph;
    std::size_t k = 0;
    Configuration I;
    std::optional<Configuration> J;
};

// Interval form:            Abstract form:
//   n k                       abstract n k
//   id left right  (n of)     id             (n of)
//   I id...                   m
//   [J id...]                 u v            (m of)
//                             I id...
//                             [J id...]
// '#' starts a comment, blank lines are skipped, coordinates are integers or
// p/q rationals. Errors carry 1-based line numbers.
InstanceFile parse_instance(const std::string& text);

std::string format_instance(const IntervalGraph& g, std::size_t k, const Configuration& I,
                            const std::optional<Configuration>& J);

std::string format_abstract_instance(const AbstractGraph& g, std::size_t k,
                                     const Configuration& I,
                                     const std::optional<Configuration>& J);

// First line: move count. Then one "from to" line per move.
ReconfigSequence parse_sequence(const std::string& text);
std::string format_sequence(const ReconfigSequence& s);

} // namespace tokenslide
