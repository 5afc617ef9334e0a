#include "tokenslide/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace tokenslide {

namespace {

using State = std::vector<int>;

struct StateHash {
    std::size_t operator()(const State& s) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : s) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace

AbstractGraph AbstractGraph::from_edges(
    const std::vector<std::string>& vertices,
    const std::vector<std::pair<std::string, std::string>>& edges) {
    AbstractGraph g;
    if (vertices.empty())
        throw InputError("cannot build a graph with no vertices");
    for (const std::string& id : vertices) {
        if (g.index_.count(id))
            throw InputError("duplicate vertex id '" + id + "'");
        g.index_.emplace(id, g.ids_.size());
        g.ids_.push_back(id);
    }
    g.adj_.assign(g.ids_.size(), std::vector<char>(g.ids_.size(), 0));
    for (const auto& [u, v] : edges) {
        std::size_t ui = g.index_of(u);
        std::size_t vi = g.index_of(v);
        if (ui == vi)
            throw InputError("self-loop on '" + u + "' is not allowed");
        g.adj_[ui][vi] = g.adj_[vi][ui] = 1;
    }
    std::vector<std::size_t> order(g.ids_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&g](std::size_t a, std::size_t b) { return g.ids_[a] < g.ids_[b]; });
    g.canon_rank_.assign(g.ids_.size(), 0);
    for (std::size_t r = 0; r < order.size(); ++r)
        g.canon_rank_[order[r]] = r;
    return g;
}

AbstractGraph AbstractGraph::from_interval_graph(const IntervalGraph& src) {
    if (src.empty())
        throw InputError("cannot wrap an empty interval graph");
    AbstractGraph g;
    for (const std::string& id : src.vertex_ids()) {
        g.index_.emplace(id, g.ids_.size());
        g.ids_.push_back(id);
    }
    std::size_t n = g.ids_.size();
    g.adj_.assign(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (src.adjacent_idx(i, j))
                g.adj_[i][j] = g.adj_[j][i] = 1;
    g.has_orders_ = true;
    g.lkey_.resize(n);
    g.rkey_.resize(n);
    g.canon_rank_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        g.lkey_[i] = src.position(LineOrder::left, g.ids_[i]);
        g.rkey_[i] = src.position(LineOrder::right, g.ids_[i]);
        g.canon_rank_[i] = static_cast<std::size_t>(g.lkey_[i]) - 1;
    }
    return g;
}

std::size_t AbstractGraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw InputError("unknown vertex id '" + id + "'");
    return it->second;
}

bool AbstractGraph::adjacent(const std::string& u, const std::string& v) const {
    std::size_t ui = index_of(u);
    std::size_t vi = index_of(v);
    if (ui == vi)
        throw InputError("adjacent() requires two distinct vertices, got '" + u + "' twice");
    return adjacent_idx(ui, vi);
}

bool AbstractGraph::before_left_idx(std::size_t u, std::size_t v) const {
    if (!has_orders_)
        throw InputError("graph carries no line orders");
    return lkey_[u] < lkey_[v];
}

bool AbstractGraph::before_right_idx(std::size_t u, std::size_t v) const {
    if (!has_orders_)
        throw InputError("graph carries no line orders");
    return rkey_[u] < rkey_[v];
}

std::vector<std::size_t> AbstractGraph::canonical_vertex_order() const {
    std::vector<std::size_t> order(ids_.size());
    for (std::size_t i = 0; i < ids_.size(); ++i)
        order[canon_rank_[i]] = i;
    return order;
}

std::vector<std::pair<std::string, std::string>> AbstractGraph::edge_list() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < ids_.size(); ++i)
        for (std::size_t j = i + 1; j < ids_.size(); ++j)
            if (adj_[i][j])
                out.emplace_back(ids_[i], ids_[j]);
    return out;
}

namespace {

bool state_independent(const AbstractGraph& g, const State& s) {
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            if (g.adjacent_idx(static_cast<std::size_t>(s[a]), static_cast<std::size_t>(s[b])))
                return false;
    return true;
}

State canonical_state(const AbstractGraph& g, const Configuration& cfg, std::size_t k,
                      const char* which) {
    if (cfg.size() != k)
        throw InputError(std::string(which) + " has " + std::to_string(cfg.size()) +
                         " tokens, expected " + std::to_string(k));
    State s;
    s.reserve(cfg.size());
    for (const std::string& id : cfg)
        s.push_back(static_cast<int>(g.index_of(id)));
    std::sort(s.begin(), s.end(), [&g](int a, int b) {
        return g.canonical_rank(static_cast<std::size_t>(a)) <
               g.canonical_rank(static_cast<std::size_t>(b));
    });
    for (std::size_t a = 0; a + 1 < s.size(); ++a)
        if (s[a] == s[a + 1])
            throw InputError(std::string(which) + " repeats vertex '" +
                             g.id_at(static_cast<std::size_t>(s[a])) + "'");
    if (!state_independent(g, s))
        throw InputError(std::string(which) + " is not an independent set");
    return s;
}

Configuration to_configuration(const AbstractGraph& g, const State& s) {
    Configuration out;
    out.reserve(s.size());
    for (int v : s)
        out.push_back(g.id_at(static_cast<std::size_t>(v)));
    return out;
}

// Deterministic neighbour enumeration: token positions in state order, slide
// targets in canonical vertex order.
template <typename Fn>
void for_each_neighbor(const AbstractGraph& g, const State& s,
                       const std::vector<std::size_t>& canon_order, Fn&& fn) {
    for (std::size_t p = 0; p < s.size(); ++p) {
        std::size_t u = static_cast<std::size_t>(s[p]);
        for (std::size_t v : canon_order) {
            if (!g.adjacent_idx(u, v))
                continue;
            bool blocked = false;
            for (std::size_t q = 0; q < s.size(); ++q) {
                std::size_t w = static_cast<std::size_t>(s[q]);
                if (w == v || (q != p && g.adjacent_idx(v, w))) {
                    blocked = true;
                    break;
                }
            }
            if (blocked)
                continue;
            State next = s;
            next[p] = static_cast<int>(v);
            std::sort(next.begin(), next.end(), [&g](int a, int b) {
                return g.canonical_rank(static_cast<std::size_t>(a)) <
                       g.canonical_rank(static_cast<std::size_t>(b));
            });
            fn(Move{g.id_at(u), g.id_at(v)}, std::move(next));
        }
    }
}

struct Bfs {
    std::unordered_map<State, std::size_t, StateHash> dist;
    std::vector<State> discovery; // BFS order
    std::unordered_map<State, std::pair<State, Move>, StateHash> parent;

    // Runs until `stop` returns true or the component is exhausted.
    template <typename Stop>
    void run(const AbstractGraph& g, const State& start, std::size_t state_cap, bool keep_parents,
             Stop&& stop) {
        auto canon_order = g.canonical_vertex_order();
        std::deque<State> queue;
        dist.emplace(start, 0);
        discovery.push_back(start);
        if (stop(start))
            return;
        queue.push_back(start);
        while (!queue.empty()) {
            State cur = std::move(queue.front());
            queue.pop_front();
            std::size_t d = dist.at(cur);
            bool done = false;
            for_each_neighbor(g, cur, canon_order, [&](Move mv, State next) {
                if (done || dist.count(next))
                    return;
                if (dist.size() >= state_cap)
                    throw InputError("state space exceeds the cap of " +
                                     std::to_string(state_cap) + " states");
                dist.emplace(next, d + 1);
                discovery.push_back(next);
                if (keep_parents)
                    parent.emplace(next, std::make_pair(cur, mv));
                if (stop(next)) {
                    done = true;
                    return;
                }
                queue.push_back(next);
            });
            if (done)
                return;
        }
    }
};

} // namespace

std::vector<Configuration> enumerate_configurations(const AbstractGraph& g, std::size_t k,
                                                    std::size_t state_cap) {
    if (k < 1 || k > g.size())
        throw InputError("k must be between 1 and " + std::to_string(g.size()) + ", got " +
                         std::to_string(k));
    auto canon_order = g.canonical_vertex_order();
    std::vector<Configuration> out;
    State partial;
    auto extend = [&](auto&& self, std::size_t from) -> void {
        if (partial.size() == k) {
            if (out.size() >= state_cap)
                throw InputError("independent set count exceeds the cap of " +
                                 std::to_string(state_cap));
            out.push_back(to_configuration(g, partial));
            return;
        }
        for (std::size_t r = from; r < canon_order.size(); ++r) {
            std::size_t v = canon_order[r];
            bool ok = true;
            for (int u : partial)
                if (g.adjacent_idx(static_cast<std::size_t>(u), v)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            partial.push_back(static_cast<int>(v));
            self(self, r + 1);
            partial.pop_back();
        }
    };
    extend(extend, 0);
    return out;
}

BfsResult bfs_reconfigurable(const AbstractGraph& g, std::size_t k, const Configuration& I,
                             const Configuration& J, std::size_t state_cap) {
    State start = canonical_state(g, I, k, "start configuration");
    State goal = canonical_state(g, J, k, "target configuration");
    Bfs bfs;
    bool found = false;
    bfs.run(g, start, state_cap, false, [&](const State& s) {
        found = s == goal;
        return found;
    });
    BfsResult out;
    out.reachable = found;
    if (found)
        out.distance = bfs.dist.at(goal);
    return out;
}

std::optional<ReconfigSequence> bfs_shortest_sequence(const AbstractGraph& g, std::size_t k,
                                                      const Configuration& I,
                                                      const Configuration& J,
                                                      std::size_t state_cap) {
    State start = canonical_state(g, I, k, "start configuration");
    State goal = canonical_state(g, J, k, "target configuration");
    Bfs bfs;
    bool found = false;
    bfs.run(g, start, state_cap, true, [&](const State& s) {
        found = s == goal;
        return found;
    });
    if (!found)
        return std::nullopt;
    ReconfigSequence seq;
    State cur = goal;
    while (cur != start) {
        const auto& [prev, mv] = bfs.parent.at(cur);
        seq.push_back(mv);
        cur = prev;
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
}

std::vector<Configuration> component_states(const AbstractGraph& g, const Configuration& A,
                                            std::size_t state_cap) {
    State start = canonical_state(g, A, A.size(), "configuration");
    Bfs bfs;
    bfs.run(g, start, state_cap, false, [](const State&) { return false; });
    std::vector<Configuration> out;
    out.reserve(bfs.discovery.size());
    for (const State& s : bfs.discovery)
        out.push_back(to_configuration(g, s));
    return out;
}

std::vector<std::pair<Move, Configuration>> state_neighbors(const AbstractGraph& g,
                                                            const Configuration& state) {
    State s = canonical_state(g, state, state.size(), "configuration");
    auto canon_order = g.canonical_vertex_order();
    std::vector<std::pair<Move, Configuration>> out;
    for_each_neighbor(g, s, canon_order, [&](Move mv, State next) {
        out.emplace_back(std::move(mv), to_configuration(g, next));
    });
    return out;
}

Configuration extreme_set_of_component(const AbstractGraph& g, const Configuration& A,
                                       std::size_t p, std::size_t state_cap) {
    if (!g.has_line_orders())
        throw InputError("extreme sets need a graph with line orders");
    if (p > A.size())
        throw InputError("p must be between 0 and " + std::to_string(A.size()) + ", got " +
                         std::to_string(p));
    State start = canonical_state(g, A, A.size(), "configuration");
    Bfs bfs;
    bfs.run(g, start, state_cap, false, [](const State&) { return false; });
    State extreme = start;
    for (const State& s : bfs.discovery) {
        for (std::size_t q = 0; q < s.size(); ++q) {
            std::size_t cand = static_cast<std::size_t>(s[q]);
            std::size_t cur = static_cast<std::size_t>(extreme[q]);
            if (q < p) { // position q+1 <= p: right-order minimum
                if (g.before_right_idx(cand, cur))
                    extreme[q] = s[q];
            } else { // left-order maximum
                if (g.before_left_idx(cur, cand))
                    extreme[q] = s[q];
            }
        }
    }
    return to_configuration(g, extreme);
}

namespace {

std::size_t clique_search(const AbstractGraph& g, std::vector<std::size_t>& cand,
                          std::size_t chosen, std::size_t best) {
    if (cand.empty())
        return std::max(best, chosen);
    if (chosen + cand.size() <= best)
        return best;
    std::vector<std::size_t> rest = cand;
    while (!rest.empty()) {
        if (chosen + rest.size() <= best)
            break;
        std::size_t v = rest.back();
        rest.pop_back();
        std::vector<std::size_t> next;
        for (std::size_t u : rest)
            if (g.adjacent_idx(u, v))
                next.push_back(u);
        best = clique_search(g, next, chosen + 1, best);
    }
    return best;
}

} // namespace

std::size_t max_clique_size(const AbstractGraph& g) {
    std::vector<std::size_t> all(g.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return clique_search(g, all, 0, 0);
}

std::size_t max_independent_set_size(const IntervalGraph& g) {
    // Sweep by right endpoint, taking every interval that clears the last one.
    std::size_t count = 0;
    std::size_t last = 0;
    bool have_last = false;
    for (std::size_t idx : g.order(LineOrder::right)) {
        if (!have_last || g.entirely_left_idx(last, idx)) {
            ++count;
            last = idx;
            have_last = true;
        }
    }
    return count;
}

} // namespace tokenslide
