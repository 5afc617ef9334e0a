#pragma once

#include "tokenslide/errors.hpp"
#include "tokenslide/rational.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tokenslide {

struct Interval {
    std::string id;
    Rational left;
    Rational right;
};

using VertexSet = std::set<std::string>;

enum class LineOrder { left, right };
enum class Order { less, greater };

// Closed intervals on the line with all 4 endpoint coincidence classes broken
// symbolically at build time: endpoints sort by (coordinate, kind, insertion
// index) with a left endpoint preceding a right endpoint at the same
// coordinate, so touching intervals stay adjacent and every pair of vertices
// is strictly ordered by both <=_left and <=_right. Ranks assigned at build
// time survive restriction, so induced subgraphs agree with the parent graph
// on adjacency and on both orders.
class IntervalGraph {
public:
    IntervalGraph() = default;

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    bool has_vertex(const std::string& id) const { return index_.count(id) != 0; }

    // Throws InputError for an unknown id.
    std::size_t index_of(const std::string& id) const;
    const std::string& id_at(std::size_t idx) const { return entries_[idx].iv.id; }
    const Interval& interval(const std::string& id) const { return entries_[index_of(id)].iv; }

    // Vertex ids in insertion order.
    std::vector<std::string> vertex_ids() const;
    // Entry indices sorted by the requested endpoint order.
    const std::vector<std::size_t>& order(LineOrder which) const {
        return which == LineOrder::left ? by_left_ : by_right_;
    }
    // 1-based position of a vertex in the requested order of *this* graph.
    std::size_t position(LineOrder which, const std::string& id) const;

    bool adjacent(const std::string& u, const std::string& v) const;
    bool adjacent_idx(std::size_t u, std::size_t v) const {
        const Entry& a = entries_[u];
        const Entry& b = entries_[v];
        return a.lkey < b.rkey && b.lkey < a.rkey;
    }
    // True when u lies entirely left of v (disjoint, u before v).
    bool entirely_left_idx(std::size_t u, std::size_t v) const {
        return entries_[u].rkey < entries_[v].lkey;
    }
    bool entirely_left(const std::string& u, const std::string& v) const {
        return entirely_left_idx(index_of(u), index_of(v));
    }

    VertexSet closed_neighborhood(const std::string& u) const;
    VertexSet component_of(const std::string& u) const;

    // Induced subgraph on the complement of `removed`; ids, coordinates, and
    // endpoint ranks are inherited, so adjacency and both orders restrict.
    IntervalGraph without(const VertexSet& removed) const;

    Order compare_order(LineOrder which, const std::string& u, const std::string& v) const;
    bool before_idx(LineOrder which, std::size_t u, std::size_t v) const {
        return which == LineOrder::left ? entries_[u].lkey < entries_[v].lkey
                                        : entries_[u].rkey < entries_[v].rkey;
    }
    bool before(LineOrder which, const std::string& u, const std::string& v) const {
        return before_idx(which, index_of(u), index_of(v));
    }

    // All edges, each once, endpoints in insertion order; deterministic.
    std::vector<std::pair<std::string, std::string>> edges() const;

    friend IntervalGraph build_graph(const std::vector<Interval>& intervals);

private:
    struct Entry {
        Interval iv;
        long long lkey = 0; // rank of the left endpoint among all 2n endpoints
        long long rkey = 0; // rank of the right endpoint
    };

    void reindex();

    std::vector<Entry> entries_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::size_t> by_left_, by_right_;
    std::vector<std::size_t> left_pos_, right_pos_; // 0-based rank within this graph
};

// Throws InputError on empty input, duplicate id, or left >= right.
IntervalGraph build_graph(const std::vector<Interval>& intervals);

} // namespace tokenslide
