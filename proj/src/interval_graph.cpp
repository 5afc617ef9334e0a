#include "tokenslide/interval_graph.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace tokenslide {

std::size_t IntervalGraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw InputError("unknown vertex id '" + id + "'");
    return it->second;
}

std::vector<std::string> IntervalGraph::vertex_ids() const {
    std::vector<std::string> ids;
    ids.reserve(entries_.size());
    for (const Entry& e : entries_)
        ids.push_back(e.iv.id);
    return ids;
}

std::size_t IntervalGraph::position(LineOrder which, const std::string& id) const {
    std::size_t idx = index_of(id);
    return 1 + (which == LineOrder::left ? left_pos_[idx] : right_pos_[idx]);
}

bool IntervalGraph::adjacent(const std::string& u, const std::string& v) const {
    std::size_t ui = index_of(u);
    std::size_t vi = index_of(v);
    if (ui == vi)
        throw InputError("adjacent() requires two distinct vertices, got '" + u + "' twice");
    return adjacent_idx(ui, vi);
}

VertexSet IntervalGraph::closed_neighborhood(const std::string& u) const {
    std::size_t ui = index_of(u);
    VertexSet out;
    out.insert(u);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (i != ui && adjacent_idx(ui, i))
            out.insert(entries_[i].iv.id);
    return out;
}

VertexSet IntervalGraph::component_of(const std::string& u) const {
    std::size_t start = index_of(u);
    std::vector<char> seen(entries_.size(), 0);
    std::queue<std::size_t> queue;
    seen[start] = 1;
    queue.push(start);
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop();
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (!seen[i] && i != cur && adjacent_idx(cur, i)) {
                seen[i] = 1;
                queue.push(i);
            }
        }
    }
    VertexSet out;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (seen[i])
            out.insert(entries_[i].iv.id);
    return out;
}

IntervalGraph IntervalGraph::without(const VertexSet& removed) const {
    for (const std::string& id : removed)
        index_of(id); // validate
    IntervalGraph sub;
    for (const Entry& e : entries_)
        if (!removed.count(e.iv.id))
            sub.entries_.push_back(e);
    sub.reindex();
    return sub;
}

Order IntervalGraph::compare_order(LineOrder which, const std::string& u,
                                   const std::string& v) const {
    std::size_t ui = index_of(u);
    std::size_t vi = index_of(v);
    if (ui == vi)
        throw InputError("compare_order() requires two distinct vertices, got '" + u + "' twice");
    return before_idx(which, ui, vi) ? Order::less : Order::greater;
}

std::vector<std::pair<std::string, std::string>> IntervalGraph::edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        for (std::size_t j = i + 1; j < entries_.size(); ++j)
            if (adjacent_idx(i, j))
                out.emplace_back(entries_[i].iv.id, entries_[j].iv.id);
    return out;
}

void IntervalGraph::reindex() {
    index_.clear();
    for (std::size_t i = 0; i < entries_.size(); ++i)
        index_.emplace(entries_[i].iv.id, i);
    by_left_.resize(entries_.size());
    by_right_.resize(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i)
        by_left_[i] = by_right_[i] = i;
    std::sort(by_left_.begin(), by_left_.end(), [this](std::size_t a, std::size_t b) {
        return entries_[a].lkey < entries_[b].lkey;
    });
    std::sort(by_right_.begin(), by_right_.end(), [this](std::size_t a, std::size_t b) {
        return entries_[a].rkey < entries_[b].rkey;
    });
    left_pos_.assign(entries_.size(), 0);
    right_pos_.assign(entries_.size(), 0);
    for (std::size_t p = 0; p < entries_.size(); ++p) {
        left_pos_[by_left_[p]] = p;
        right_pos_[by_right_[p]] = p;
    }
}

IntervalGraph build_graph(const std::vector<Interval>& intervals) {
    if (intervals.empty())
        throw InputError("cannot build a graph from an empty interval list");

    IntervalGraph g;
    g.entries_.reserve(intervals.size());
    for (const Interval& iv : intervals) {
        if (!(iv.left < iv.right))
            throw InputError("interval '" + iv.id + "' needs left < right, got [" +
                             format_rational(iv.left) + ", " + format_rational(iv.right) + "]");
        if (g.index_.count(iv.id))
            throw InputError("duplicate interval id '" + iv.id + "'");
        g.index_.emplace(iv.id, g.entries_.size());
        g.entries_.push_back({iv, 0, 0});
    }

    // Break endpoint ties: (coordinate, kind, insertion index), left endpoint
    // kind before right endpoint kind, so a shared point keeps its overlap.
    struct Endpoint {
        Rational coord;
        int kind; // 0 = left, 1 = right
        std::size_t owner;
    };
    std::vector<Endpoint> pts;
    pts.reserve(2 * g.entries_.size());
    for (std::size_t i = 0; i < g.entries_.size(); ++i) {
        pts.push_back({g.entries_[i].iv.left, 0, i});
        pts.push_back({g.entries_[i].iv.right, 1, i});
    }
    std::sort(pts.begin(), pts.end(), [](const Endpoint& a, const Endpoint& b) {
        return std::tie(a.coord, a.kind, a.owner) < std::tie(b.coord, b.kind, b.owner);
    });
    for (std::size_t rank = 0; rank < pts.size(); ++rank) {
        if (pts[rank].kind == 0)
            g.entries_[pts[rank].owner].lkey = static_cast<long long>(rank);
        else
            g.entries_[pts[rank].owner].rkey = static_cast<long long>(rank);
    }
    g.reindex();
    return g;
}

} // namespace tokenslide
