#include "tokenslide/generators.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace tokenslide {

namespace {

// Interval with individually open or closed ends, used to state the intended
// lower-bound layout exactly as defined before any coordinate nudging.
struct Span {
    Rational lo, hi;
    bool lo_closed = true;
    bool hi_closed = true;
};

bool spans_intersect(const Span& x, const Span& y) {
    Rational lo = x.lo;
    bool lo_closed = x.lo_closed;
    if (y.lo > lo) {
        lo = y.lo;
        lo_closed = y.lo_closed;
    } else if (y.lo == lo) {
        lo_closed = lo_closed && y.lo_closed;
    }
    Rational hi = x.hi;
    bool hi_closed = x.hi_closed;
    if (y.hi < hi) {
        hi = y.hi;
        hi_closed = y.hi_closed;
    } else if (y.hi == hi) {
        hi_closed = hi_closed && y.hi_closed;
    }
    if (lo < hi)
        return true;
    return lo == hi && lo_closed && hi_closed;
}

struct Layout {
    std::vector<std::string> ids;                       // declaration order
    std::unordered_map<std::string, Span> spans;        // intended, open/closed
    std::unordered_map<std::string, Interval> realized; // integer, closed
    std::map<std::string, std::string> roles;
};

// Shared by the generator and the expected-edge computation so both always
// talk about the same family.
Layout lower_bound_layout(std::size_t m, std::size_t k) {
    if (m < 1 || k < 1)
        throw InputError("lower-bound family needs m >= 1 and k >= 1");
    const std::size_t N = m + 2 * k - 1;

    Layout out;
    std::unordered_map<std::string, long long> slot;
    std::vector<std::string> bases;
    for (std::size_t i = k - 1; i >= 1; --i)
        bases.push_back("a" + std::to_string(i));
    for (std::size_t i = 1; i <= N; ++i)
        bases.push_back("v" + std::to_string(i));
    for (std::size_t i = 1; i <= k; ++i)
        bases.push_back("b" + std::to_string(i));
    for (std::size_t t = 0; t < bases.size(); ++t) {
        const std::string& id = bases[t];
        long long base = 10 * static_cast<long long>(t);
        slot[id] = base;
        out.ids.push_back(id);
        out.spans[id] = {Rational(base), Rational(base + 8), true, true};
        out.realized[id] = {id, Rational(base), Rational(base + 8)};
        out.roles[id] = id[0] == 'a' ? "base-a" : (id[0] == 'v' ? "base-v" : "base-b");
    }

    auto mid = [&](const std::string& id) { return slot.at(id) + 4; };

    for (std::size_t i = 1; i + 1 <= N; ++i) {
        std::string id = "v" + std::to_string(i) + "_" + std::to_string(i + 1);
        long long lo = mid("v" + std::to_string(i));
        long long hi = mid("v" + std::to_string(i + 1));
        out.ids.push_back(id);
        out.spans[id] = {Rational(lo), Rational(hi), false, false};
        out.realized[id] = {id, Rational(lo + 1), Rational(hi - 1)};
        out.roles[id] = "path";
    }

    for (std::size_t i = 1; i + 1 <= k; ++i) {
        std::string id = "l" + std::to_string(i);
        long long lo = slot.at("a" + std::to_string(i));
        long long hi = slot.at("v" + std::to_string(N - (k - 1) - i)) + 8;
        out.ids.push_back(id);
        out.spans[id] = {Rational(lo), Rational(hi), false, false};
        out.realized[id] = {id, Rational(lo + 1), Rational(hi - 1)};
        out.roles[id] = "long-left";
    }
    for (std::size_t i = 1; i <= k; ++i) {
        std::string id = "r" + std::to_string(i);
        long long lo = slot.at("v" + std::to_string(k - i + 1));
        long long hi = slot.at("b" + std::to_string(i)) + 8;
        out.ids.push_back(id);
        out.spans[id] = {Rational(lo), Rational(hi), false, false};
        out.realized[id] = {id, Rational(lo + 1), Rational(hi - 1)};
        out.roles[id] = "long-right";
    }
    return out;
}

} // namespace

std::set<std::pair<std::string, std::string>> lower_bound_expected_edges(std::size_t m,
                                                                         std::size_t k) {
    Layout layout = lower_bound_layout(m, k);
    std::set<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < layout.ids.size(); ++i) {
        for (std::size_t j = i + 1; j < layout.ids.size(); ++j) {
            const std::string& u = layout.ids[i];
            const std::string& v = layout.ids[j];
            if (spans_intersect(layout.spans.at(u), layout.spans.at(v)))
                edges.emplace(u, v);
        }
    }
    return edges;
}

LowerBoundInstance gen_lower_bound(std::size_t m, std::size_t k) {
    Layout layout = lower_bound_layout(m, k);

    std::vector<Interval> intervals;
    intervals.reserve(layout.ids.size());
    for (const std::string& id : layout.ids)
        intervals.push_back(layout.realized.at(id));

    LowerBoundInstance inst;
    inst.graph = build_graph(intervals);
    inst.roles = layout.roles;
    inst.m = m;
    inst.k = k;

    const std::size_t expected_size = 8 * k + 2 * m - 5;
    if (inst.graph.size() != expected_size)
        throw InternalError("lower-bound family has " + std::to_string(inst.graph.size()) +
                            " vertices, expected " + std::to_string(expected_size));

    std::set<std::pair<std::string, std::string>> expected = lower_bound_expected_edges(m, k);
    std::set<std::pair<std::string, std::string>> realized;
    for (auto& e : inst.graph.edges())
        realized.insert(e);
    if (realized != expected)
        throw InternalError("lower-bound realization disagrees with the intended adjacency for m=" +
                            std::to_string(m) + " k=" + std::to_string(k));

    for (std::size_t i = 1; i <= k; ++i) {
        inst.I.push_back("v" + std::to_string(i));
        inst.J.push_back("b" + std::to_string(i));
    }
    inst.I = make_configuration(inst.graph, inst.I);
    inst.J = make_configuration(inst.graph, inst.J);
    return inst;
}

IntervalGraph gen_random_interval(std::size_t n, std::uint64_t seed, RandomModel model) {
    if (model != RandomModel::uniform_endpoints)
        throw InputError("unknown random model");
    if (n < 1)
        throw InputError("random instance needs n >= 1");
    // Raw engine output reduced by modulo: mt19937_64 is fully specified, so
    // the same seed reproduces the same graph on every platform.
    std::mt19937_64 engine(seed);
    const unsigned long long range = 4 * static_cast<unsigned long long>(n);
    std::vector<Interval> intervals;
    intervals.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        unsigned long long x, y;
        do {
            x = engine() % range;
            y = engine() % range;
        } while (x == y);
        intervals.push_back({"x" + std::to_string(i), Rational(static_cast<long long>(std::min(x, y))),
                             Rational(static_cast<long long>(std::max(x, y)))});
    }
    return build_graph(intervals);
}

bool Digraph::has_vertex(const std::string& x) const {
    return std::find(vertices.begin(), vertices.end(), x) != vertices.end();
}

bool Digraph::has_edge(const std::string& x, const std::string& y) const {
    return edges.count({x, y}) != 0;
}

namespace {

void validate_digraph(const Digraph& h) {
    if (h.vertices.empty())
        throw InputError("digraph needs at least one vertex");
    std::unordered_set<std::string> seen;
    for (const std::string& v : h.vertices)
        if (!seen.insert(v).second)
            throw InputError("duplicate digraph vertex '" + v + "'");
    for (const auto& [x, y] : h.edges)
        if (!h.has_vertex(x) || !h.has_vertex(y))
            throw InputError("digraph edge " + x + " -> " + y + " uses an unknown vertex");
}

void validate_hword(const Digraph& h, const Word& w, const char* name) {
    if (w.empty())
        throw InputError(std::string(name) + " must be nonempty");
    for (const std::string& letter : w)
        if (!h.has_vertex(letter))
            throw InputError(std::string(name) + " uses unknown letter '" + letter + "'");
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (!h.has_edge(w[i], w[i + 1]))
            throw InputError(std::string(name) + " is not a walk: no edge " + w[i] + " -> " +
                             w[i + 1] + " at position " + std::to_string(i + 1));
}

} // namespace

bool is_hword(const Digraph& h, const Word& w) {
    if (w.empty())
        return false;
    for (const std::string& letter : w)
        if (!h.has_vertex(letter))
            return false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (!h.has_edge(w[i], w[i + 1]))
            return false;
    return true;
}

std::vector<Word> enumerate_hwords(const Digraph& h, std::size_t n) {
    validate_digraph(h);
    if (n < 1)
        throw InputError("word length must be at least 1");
    std::vector<Word> out;
    Word partial;
    auto extend = [&](auto&& self) -> void {
        if (partial.size() == n) {
            out.push_back(partial);
            return;
        }
        for (const std::string& y : h.vertices) {
            if (!partial.empty() && !h.has_edge(partial.back(), y))
                continue;
            partial.push_back(y);
            self(self);
            partial.pop_back();
        }
    };
    extend(extend);
    return out;
}

std::string level_vertex_id(const std::string& x, std::size_t level) {
    return x + "@" + std::to_string(level);
}

HardnessInstance gen_hardness(const Digraph& h, const Word& a, const Word& b) {
    validate_digraph(h);
    if (a.size() != b.size())
        throw InputError("word lengths differ: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
    validate_hword(h, a, "first word");
    validate_hword(h, b, "second word");
    const std::size_t n = a.size();

    std::vector<std::string> ids;
    for (std::size_t level = 1; level <= n; ++level)
        for (const std::string& x : h.vertices)
            ids.push_back(level_vertex_id(x, level));

    // Incomparability edges of the layered order: same level always, adjacent
    // levels exactly when the digraph edge is absent, never otherwise.
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t level = 1; level <= n; ++level) {
        for (std::size_t xi = 0; xi < h.vertices.size(); ++xi) {
            const std::string& x = h.vertices[xi];
            for (std::size_t yi = xi + 1; yi < h.vertices.size(); ++yi)
                edges.emplace_back(level_vertex_id(x, level),
                                   level_vertex_id(h.vertices[yi], level));
            if (level < n)
                for (const std::string& y : h.vertices)
                    if (!h.has_edge(x, y))
                        edges.emplace_back(level_vertex_id(x, level),
                                           level_vertex_id(y, level + 1));
        }
    }

    HardnessInstance inst;
    inst.h = h;
    inst.n = n;
    inst.graph = AbstractGraph::from_edges(ids, edges);
    inst.width_bound = 2 * h.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        inst.A.push_back(level_vertex_id(a[i], i + 1));
        inst.B.push_back(level_vertex_id(b[i], i + 1));
    }
    return inst;
}

BfsResult hword_reachability_oracle(const Digraph& h, const Word& a, const Word& b,
                                    std::size_t state_cap) {
    validate_digraph(h);
    if (a.size() != b.size())
        throw InputError("word lengths differ: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
    validate_hword(h, a, "first word");
    validate_hword(h, b, "second word");
    const std::size_t n = a.size();

    auto key = [](const Word& w) {
        std::string out;
        for (const std::string& letter : w) {
            out += letter;
            out += '\x1f';
        }
        return out;
    };

    std::unordered_map<std::string, std::size_t> dist;
    std::deque<Word> queue;
    dist.emplace(key(a), 0);
    if (a == b)
        return {true, 0};
    queue.push_back(a);
    while (!queue.empty()) {
        Word cur = std::move(queue.front());
        queue.pop_front();
        std::size_t d = dist.at(key(cur));
        for (std::size_t i = 0; i < n; ++i) {
            for (const std::string& y : h.vertices) {
                if (y == cur[i])
                    continue;
                if (i > 0 && !h.has_edge(cur[i - 1], y))
                    continue;
                if (i + 1 < n && !h.has_edge(y, cur[i + 1]))
                    continue;
                Word next = cur;
                next[i] = y;
                if (!dist.emplace(key(next), d + 1).second)
                    continue;
                if (dist.size() > state_cap)
                    throw InputError("word space exceeds the cap of " +
                                     std::to_string(state_cap) + " states");
                if (next == b)
                    return {true, d + 1};
                queue.push_back(std::move(next));
            }
        }
    }
    return {false, std::nullopt};
}

} // namespace tokenslide
