#pragma once

#include "tokenslide/reconfiguration.hpp"

#include <string>

namespace tokenslide {

struct PushResult {
    std::string target;   // the vertex the token ends on
    ReconfigSequence seq; // consecutive slides along one shortest path
};

// Slides the single token on u to the right-order minimum vertex w reachable
// in h, along a shortest u-w path. Ties between equal-distance predecessors
// break toward the right-order minimum, so the emitted path walks
// monotonically left: v_m <_right ... <_right v_1, and v_2 <_right v_0 when
// the path has at least two edges. Returns (u, []) when u is already the
// minimum.
PushResult push_token_left(const IntervalGraph& h, const std::string& u);

// Mirror image: target is the left-order maximum reachable vertex, ties break
// toward the left-order maximum, and the path walks monotonically right.
PushResult push_token_right(const IntervalGraph& h, const std::string& u);

struct PushApartResult {
    Configuration config; // the separated pair (a, b) in line order
    ReconfigSequence seq;
};

// Alternates push_token_left(h - N[b], a) and push_token_right(h - N[a], b)
// until a full round moves nothing. The result is the 1-extreme set of the
// pair's component in the two-token state space, reached in at most 2|V(h)|
// slides (enforced; exceeding the bound is an internal error).
PushApartResult push_apart(const IntervalGraph& h, const Configuration& ab);

} // namespace tokenslide
