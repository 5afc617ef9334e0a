#pragma once

#include "tokenslide/interval_graph.hpp"
#include "tokenslide/reconfiguration.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tokenslide {

// Plain undirected graph used by the brute-force reachability oracle. It can
// wrap an interval graph (keeping both endpoint orders, which the extreme-set
// computation needs) or be built from an explicit edge list, e.g. for the
// poset incomparability graphs, which are not interval graphs.
class AbstractGraph {
public:
    AbstractGraph() = default;

    static AbstractGraph from_edges(const std::vector<std::string>& vertices,
                                    const std::vector<std::pair<std::string, std::string>>& edges);
    static AbstractGraph from_interval_graph(const IntervalGraph& g);

    std::size_t size() const { return ids_.size(); }
    bool has_vertex(const std::string& id) const { return index_.count(id) != 0; }
    std::size_t index_of(const std::string& id) const;
    const std::string& id_at(std::size_t idx) const { return ids_[idx]; }
    std::vector<std::string> vertex_ids() const { return ids_; }

    bool adjacent_idx(std::size_t u, std::size_t v) const { return adj_[u][v] != 0; }
    bool adjacent(const std::string& u, const std::string& v) const;

    bool has_line_orders() const { return has_orders_; }
    bool before_left_idx(std::size_t u, std::size_t v) const;
    bool before_right_idx(std::size_t u, std::size_t v) const;

    // Tie-free total order used to canonicalize states: the line order when
    // present, id-lexicographic otherwise.
    std::size_t canonical_rank(std::size_t idx) const { return canon_rank_[idx]; }
    std::vector<std::size_t> canonical_vertex_order() const;

    std::vector<std::pair<std::string, std::string>> edge_list() const;

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<char>> adj_;
    bool has_orders_ = false;
    std::vector<long long> lkey_, rkey_;
    std::vector<std::size_t> canon_rank_;
};

constexpr std::size_t kDefaultStateCap = 5'000'000;

// All independent sets of size exactly k, each canonically ordered, listed in
// lexicographic order of canonical ranks. Throws when the count of explored
// states would exceed the cap.
std::vector<Configuration> enumerate_configurations(const AbstractGraph& g, std::size_t k,
                                                    std::size_t state_cap = kDefaultStateCap);

struct BfsResult {
    bool reachable = false;
    std::optional<std::size_t> distance; // number of slides when reachable
};

// Breadth-first search over the token-sliding state space, built lazily from
// I's component only. Throws when more than state_cap states are discovered.
BfsResult bfs_reconfigurable(const AbstractGraph& g, std::size_t k, const Configuration& I,
                             const Configuration& J, std::size_t state_cap = kDefaultStateCap);

// Same search, returning one shortest move list when J is reachable.
std::optional<ReconfigSequence> bfs_shortest_sequence(const AbstractGraph& g, std::size_t k,
                                                      const Configuration& I,
                                                      const Configuration& J,
                                                      std::size_t state_cap = kDefaultStateCap);

// Every state reachable from A, in BFS discovery order (A first).
std::vector<Configuration> component_states(const AbstractGraph& g, const Configuration& A,
                                            std::size_t state_cap = kDefaultStateCap);

// All states one slide away from `state`, each paired with its move,
// enumerated deterministically.
std::vector<std::pair<Move, Configuration>> state_neighbors(const AbstractGraph& g,
                                                            const Configuration& state);

// The p-extreme set of A's component: position q takes the right-order
// minimum of the q-th tokens over the component when q <= p, and the
// left-order maximum when q > p. Requires line orders.
Configuration extreme_set_of_component(const AbstractGraph& g, const Configuration& A,
                                       std::size_t p, std::size_t state_cap = kDefaultStateCap);

// Exact maximum clique size by branch and bound; fine for the desk-scale
// graphs the width checks run on.
std::size_t max_clique_size(const AbstractGraph& g);

// Exact independence number of an interval graph (greedy right-endpoint scan).
std::size_t max_independent_set_size(const IntervalGraph& g);

} // namespace tokenslide
