#pragma once

#include "tokenslide/reconfiguration.hpp"

#include <cstddef>

namespace tokenslide {

struct ExtremeResult {
    Configuration extreme;
    ReconfigSequence seq;     // valid from the start configuration to `extreme`
    std::size_t rounds = 0;   // outer sweep iterations used
};

// Hard guarantees enforced at runtime (violations throw InternalError):
// the sweep runs at most 4nk + k iterations and emits at most 8kn^2 + 2kn
// slides, for n = |V(g)|.
std::size_t max_sweep_rounds(std::size_t n, std::size_t k);
std::size_t sequence_length_bound(std::size_t n, std::size_t k);

// Slides the k tokens of `start` to the (k-1)-extreme configuration of its
// component: positions 1..k-1 end on their right-order minima, position k on
// its left-order maximum. Works by sweeping an index j over adjacent token
// pairs, separating pair (j, j+1) inside the graph with all other tokens'
// closed neighbourhoods removed, and backing up whenever the pair improves.
// A potential function argument bounds the sweep; the implementation checks
// the potential strictly increases every iteration. Requires k >= 2 (the
// k = 1 case lives in canonical_form).
ExtremeResult reconfigure_to_extreme(const IntervalGraph& g, std::size_t k,
                                     const Configuration& start);

// The component's canonical configuration: for k = 1 the single token is
// pushed to the left-order maximum of its component, otherwise
// reconfigure_to_extreme. Two configurations are connected in the sliding
// state space iff their canonical forms are equal.
ExtremeResult canonical_form(const IntervalGraph& g, std::size_t k, const Configuration& start);

struct Decision {
    bool reconfigurable = false;
    ReconfigSequence seq; // start -> target witness; empty when not reconfigurable
    Configuration canonical_start;
    Configuration canonical_target;
};

// Canonicalizes both configurations and compares. When they agree, the
// witness is the start's canonical sequence followed by the reverse of the
// target's, so its length is at most 2 * (8kn^2 + 2kn).
Decision decide_and_construct(const IntervalGraph& g, std::size_t k, const Configuration& I,
                              const Configuration& J);

} // namespace tokenslide
