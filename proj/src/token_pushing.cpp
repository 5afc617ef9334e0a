#include "tokenslide/token_pushing.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

namespace tokenslide {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs_distances(const IntervalGraph& h, std::size_t start) {
    std::vector<std::size_t> dist(h.size(), kUnreached);
    std::queue<std::size_t> queue;
    dist[start] = 0;
    queue.push(start);
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop();
        for (std::size_t i = 0; i < h.size(); ++i) {
            if (dist[i] == kUnreached && i != cur && h.adjacent_idx(cur, i)) {
                dist[i] = dist[cur] + 1;
                queue.push(i);
            }
        }
    }
    return dist;
}

// Shared by both directions. `preference` lists all vertices, most-preferred
// first: the target is the first reachable entry, and ties between
// equal-distance path steps resolve to the earlier entry. `ahead(x, y)` says
// x lies strictly beyond y in the push direction.
template <typename Ahead>
PushResult push_token(const IntervalGraph& h, const std::string& u,
                      const std::vector<std::size_t>& preference, Ahead&& ahead) {
    std::size_t ui = h.index_of(u);
    std::vector<std::size_t> from_u = bfs_distances(h, ui);

    std::size_t target = ui;
    for (std::size_t cand : preference) {
        if (from_u[cand] != kUnreached) {
            target = cand;
            break;
        }
    }
    if (target == ui)
        return {u, {}};

    // Walk from u toward the target, always stepping to a neighbour one unit
    // closer; among those, take the first in preference order.
    std::vector<std::size_t> to_target = bfs_distances(h, target);
    std::vector<std::size_t> path{ui};
    std::size_t cur = ui;
    while (cur != target) {
        std::size_t next = kUnreached;
        for (std::size_t cand : preference) {
            if (cand != cur && h.adjacent_idx(cur, cand) && to_target[cand] != kUnreached &&
                to_target[cand] + 1 == to_target[cur]) {
                next = cand;
                break;
            }
        }
        if (next == kUnreached)
            throw InternalError("push: shortest-path walk from '" + u + "' stalled at '" +
                                h.id_at(cur) + "'");
        path.push_back(next);
        cur = next;
    }

    // Path-shape check: beyond the first edge the walk is strictly monotone
    // in the push direction, and the second step already clears the start.
    const std::size_t m = path.size() - 1;
    for (std::size_t i = 1; i + 1 <= m; ++i) {
        if (!ahead(path[i + 1], path[i]))
            throw InternalError("push from '" + u + "': path is not monotone at step " +
                                std::to_string(i + 1));
    }
    if (m >= 2 && !ahead(path[2], path[0]))
        throw InternalError("push from '" + u + "': second path vertex does not clear the start");

    PushResult out;
    out.target = h.id_at(target);
    out.seq.reserve(m);
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        out.seq.push_back({h.id_at(path[i]), h.id_at(path[i + 1])});
    return out;
}

} // namespace

PushResult push_token_left(const IntervalGraph& h, const std::string& u) {
    return push_token(h, u, h.order(LineOrder::right), [&h](std::size_t x, std::size_t y) {
        return h.before_idx(LineOrder::right, x, y);
    });
}

PushResult push_token_right(const IntervalGraph& h, const std::string& u) {
    std::vector<std::size_t> preference = h.order(LineOrder::left);
    std::reverse(preference.begin(), preference.end());
    return push_token(h, u, preference, [&h](std::size_t x, std::size_t y) {
        return h.before_idx(LineOrder::left, y, x);
    });
}

PushApartResult push_apart(const IntervalGraph& h, const Configuration& ab) {
    if (ab.size() != 2)
        throw InputError("push_apart needs exactly two tokens, got " +
                         std::to_string(ab.size()));
    Configuration pair = make_configuration(h, ab);
    std::string a = pair[0];
    std::string b = pair[1];

    ReconfigSequence acc;
    const std::size_t n = h.size();
    std::size_t rounds = 0;
    while (true) {
        if (++rounds > 2 * n + 2)
            throw InternalError("push_apart did not converge within " +
                                std::to_string(2 * n + 2) + " rounds");
        PushResult left = push_token_left(h.without(h.closed_neighborhood(b)), a);
        a = left.target;
        PushResult right = push_token_right(h.without(h.closed_neighborhood(a)), b);
        b = right.target;
        acc.insert(acc.end(), left.seq.begin(), left.seq.end());
        acc.insert(acc.end(), right.seq.begin(), right.seq.end());
        if (left.seq.empty() && right.seq.empty())
            break;
    }
    if (acc.size() > 2 * n)
        throw InternalError("push_apart emitted " + std::to_string(acc.size()) +
                            " slides, above the 2n bound of " + std::to_string(2 * n));
    return {{a, b}, acc};
}

} // namespace tokenslide
