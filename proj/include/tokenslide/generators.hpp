#pragma once

#include "tokenslide/interval_graph.hpp"
#include "tokenslide/oracle.hpp"
#include "tokenslide/reconfiguration.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tokenslide {

// Adversarial family on 8k + 2m - 5 vertices: k tokens must funnel through a
// corridor of m + 2k - 1 disjoint base intervals, and the "long" intervals
// admit only one crossing at a time, so middle tokens shuttle back and forth
// and the shortest I-to-J sequence grows on the order of k^2 * m for large k
// (for k <= 3 no token is forced onto the corridor and the distance levels
// off; the tests pin the exact small distances). Built from disjoint base
// intervals a_{k-1}..a_1, v_1..v_{m+2k-1}, b_1..b_k laid out left to right,
// one open path interval bridging the midpoints of each consecutive v pair,
// and open long intervals l_i (from a_i to v_{m+k-i}) and r_i (from v_{k-i+1}
// to b_i). Base intervals sit on slots [10t, 10t+8]; path and long intervals
// are pulled in one unit at each end, which realizes exactly the overlaps of
// the open-interval layout the family is defined with.
struct LowerBoundInstance {
    IntervalGraph graph;
    std::map<std::string, std::string> roles; // id -> base-a|base-v|base-b|path|long-left|long-right
    Configuration I;                          // (v_1, ..., v_k)
    Configuration J;                          // (b_1, ..., b_k)
    std::size_t m = 0;
    std::size_t k = 0;
};

LowerBoundInstance gen_lower_bound(std::size_t m, std::size_t k);

// The intended adjacency, derived symbolically from the layout rules with
// exact open/closed endpoint arithmetic. gen_lower_bound verifies the
// realized graph against this before returning.
std::set<std::pair<std::string, std::string>> lower_bound_expected_edges(std::size_t m,
                                                                         std::size_t k);

enum class RandomModel { uniform_endpoints };

// n intervals with endpoints drawn from a fixed-width integer range using a
// seeded mt19937_64; equal seeds give identical graphs on any platform.
IntervalGraph gen_random_interval(std::size_t n, std::uint64_t seed,
                                  RandomModel model = RandomModel::uniform_endpoints);

// Directed graph with loops allowed; words over its vertices are "walks".
struct Digraph {
    std::vector<std::string> vertices;
    std::set<std::pair<std::string, std::string>> edges;

    bool has_vertex(const std::string& x) const;
    bool has_edge(const std::string& x, const std::string& y) const;
};

using Word = std::vector<std::string>;

// True iff every consecutive pair of w is an edge of h (letters must exist).
bool is_hword(const Digraph& h, const Word& w);

// All length-n walks of h, in lexicographic vertex-list order.
std::vector<Word> enumerate_hwords(const Digraph& h, std::size_t n);

std::string level_vertex_id(const std::string& x, std::size_t level);

// Sliding instance equivalent to walk reconfiguration: the incomparability
// graph of the layered order on V(h) x {1..n} where (x,i) precedes (y,j) iff
// j = i+1 and xy is an edge, or j > i+1. Same-level elements are always
// incomparable, adjacent-level ones exactly when the edge is missing. The
// n-token sliding state space on this graph is isomorphic to the space of
// length-n walks under single-letter changes, and every antichain has at most
// 2|V(h)| elements.
struct HardnessInstance {
    Digraph h;
    std::size_t n = 0;
    AbstractGraph graph;
    Configuration A; // the word a, one token per level
    Configuration B;
    std::size_t width_bound = 0; // 2 |V(h)|
};

// Throws InputError on length mismatch or when a word breaks at some
// position (reported 1-based).
HardnessInstance gen_hardness(const Digraph& h, const Word& a, const Word& b);

// Independent ground truth for hardness instances: BFS over words themselves,
// one letter change per step, walk property maintained throughout.
BfsResult hword_reachability_oracle(const Digraph& h, const Word& a, const Word& b,
                                    std::size_t state_cap = kDefaultStateCap);

} // namespace tokenslide
