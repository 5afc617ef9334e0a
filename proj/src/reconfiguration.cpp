#include "tokenslide/reconfiguration.hpp"

#include <algorithm>

namespace tokenslide {

namespace {

std::string join_ids(const Configuration& cfg) {
    std::string out = "(";
    for (std::size_t i = 0; i < cfg.size(); ++i) {
        if (i)
            out += ",";
        out += cfg[i];
    }
    out += ")";
    return out;
}

} // namespace

bool is_independent(const IntervalGraph& g, const std::vector<std::string>& ids) {
    std::vector<std::size_t> idx;
    idx.reserve(ids.size());
    for (const std::string& id : ids)
        idx.push_back(g.index_of(id));
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            if (idx[a] == idx[b] || g.adjacent_idx(idx[a], idx[b]))
                return false;
    return true;
}

Configuration make_configuration(const IntervalGraph& g, const std::vector<std::string>& ids) {
    std::vector<std::size_t> idx;
    idx.reserve(ids.size());
    for (const std::string& id : ids)
        idx.push_back(g.index_of(id));
    std::sort(idx.begin(), idx.end(), [&g](std::size_t a, std::size_t b) {
        return g.before_idx(LineOrder::left, a, b);
    });
    for (std::size_t p = 0; p + 1 < idx.size(); ++p) {
        if (idx[p] == idx[p + 1])
            throw InputError("configuration repeats vertex '" + g.id_at(idx[p]) + "'");
        if (g.adjacent_idx(idx[p], idx[p + 1]))
            throw InputError("configuration is not independent: '" + g.id_at(idx[p]) +
                             "' intersects '" + g.id_at(idx[p + 1]) + "'");
    }
    // Disjoint intervals sorted by left endpoint are line-ordered, but the
    // pairwise check above only covers neighbours; cover the rest.
    Configuration out;
    out.reserve(idx.size());
    for (std::size_t i : idx)
        out.push_back(g.id_at(i));
    if (!is_independent(g, out))
        throw InputError("configuration is not independent: " + join_ids(out));
    return out;
}

bool is_valid_configuration(const IntervalGraph& g, const Configuration& cfg) {
    for (const std::string& id : cfg)
        if (!g.has_vertex(id))
            return false;
    for (std::size_t p = 0; p + 1 < cfg.size(); ++p)
        if (!g.entirely_left(cfg[p], cfg[p + 1]))
            return false;
    return is_independent(g, cfg);
}

Configuration apply_move(const IntervalGraph& g, const Configuration& cfg, const Move& mv) {
    auto from_it = std::find(cfg.begin(), cfg.end(), mv.from);
    if (from_it == cfg.end())
        throw MoveError(MoveErrorKind::from_not_in_config,
                        "move " + mv.from + " -> " + mv.to + ": '" + mv.from +
                            "' holds no token in " + join_ids(cfg));
    if (std::find(cfg.begin(), cfg.end(), mv.to) != cfg.end())
        throw MoveError(MoveErrorKind::to_occupied, "move " + mv.from + " -> " + mv.to +
                                                        ": '" + mv.to + "' already holds a token");
    if (!g.adjacent(mv.from, mv.to))
        throw MoveError(MoveErrorKind::non_edge, "move " + mv.from + " -> " + mv.to +
                                                     ": intervals do not intersect");
    std::size_t to_idx = g.index_of(mv.to);
    for (const std::string& id : cfg) {
        if (id == mv.from)
            continue;
        if (g.adjacent_idx(to_idx, g.index_of(id)))
            throw MoveError(MoveErrorKind::independence_violated,
                            "move " + mv.from + " -> " + mv.to + ": '" + mv.to +
                                "' intersects resting token '" + id + "'");
    }
    Configuration next;
    next.reserve(cfg.size());
    for (const std::string& id : cfg)
        if (id != mv.from)
            next.push_back(id);
    auto pos = std::lower_bound(next.begin(), next.end(), mv.to,
                                [&g](const std::string& a, const std::string& b) {
                                    return g.before(LineOrder::left, a, b);
                                });
    next.insert(pos, mv.to);
    return next;
}

Configuration apply_prefix(const IntervalGraph& g, const Configuration& cfg,
                           const ReconfigSequence& s, std::size_t t) {
    if (t > s.size())
        throw InputError("prefix length " + std::to_string(t) + " exceeds sequence length " +
                         std::to_string(s.size()));
    Configuration cur = cfg;
    for (std::size_t step = 0; step < t; ++step) {
        try {
            cur = apply_move(g, cur, s[step]);
        } catch (const MoveError& e) {
            throw SequenceError(step + 1, e.kind,
                                "step " + std::to_string(step + 1) + ": " + e.what());
        }
    }
    return cur;
}

ValidationReport validate_sequence(const IntervalGraph& g, const Configuration& start,
                                   const ReconfigSequence& s,
                                   const std::optional<Configuration>& expected_end) {
    if (!is_valid_configuration(g, start))
        throw InputError("start is not a valid configuration: " + join_ids(start));
    ValidationReport report;
    report.valid = true;
    report.end = start;
    for (std::size_t step = 0; step < s.size(); ++step) {
        Configuration next;
        try {
            next = apply_move(g, report.end, s[step]);
        } catch (const MoveError& e) {
            report.valid = false;
            report.failed_step = step + 1;
            report.failure_kind = e.kind;
            report.failure_reason = e.what();
            break;
        }
        std::size_t from_pos =
            1 + static_cast<std::size_t>(std::find(report.end.begin(), report.end.end(),
                                                   s[step].from) -
                                         report.end.begin());
        std::size_t to_pos =
            1 + static_cast<std::size_t>(std::find(next.begin(), next.end(), s[step].to) -
                                         next.begin());
        report.moved_positions.push_back(from_pos);
        if (from_pos != to_pos)
            report.order_preserved = false;
        report.end = next;
    }
    if (expected_end)
        report.end_matches = report.valid && report.end == *expected_end;
    return report;
}

ReconfigSequence reverse_sequence(const ReconfigSequence& s) {
    ReconfigSequence out;
    out.reserve(s.size());
    for (auto it = s.rbegin(); it != s.rend(); ++it)
        out.push_back({it->to, it->from});
    return out;
}

SpliceResult splice(const IntervalGraph& g, const Configuration& start,
                    const ReconfigSequence& s, std::size_t i, std::size_t j) {
    const std::size_t l = start.size();
    if (!(i < j) || j > l + 1)
        throw InputError("splice cut indices need 0 <= i < j <= " + std::to_string(l + 1) +
                         ", got i=" + std::to_string(i) + " j=" + std::to_string(j));
    if (!is_valid_configuration(g, start))
        throw InputError("start is not a valid configuration: " + join_ids(start));

    // Replay, keeping every traversed configuration and each step's position.
    std::vector<Configuration> trace;
    trace.reserve(s.size() + 1);
    trace.push_back(start);
    std::vector<std::size_t> moved_pos; // 1-based, per step
    for (std::size_t step = 0; step < s.size(); ++step) {
        const Configuration& cur = trace.back();
        Configuration next;
        try {
            next = apply_move(g, cur, s[step]);
        } catch (const MoveError& e) {
            throw SequenceError(step + 1, e.kind,
                                "splice: invalid input sequence at step " +
                                    std::to_string(step + 1) + ": " + e.what());
        }
        moved_pos.push_back(1 + static_cast<std::size_t>(
                                    std::find(cur.begin(), cur.end(), s[step].from) -
                                    cur.begin()));
        trace.push_back(next);
    }
    const Configuration& final_cfg = trace.back();

    if (i >= 1) {
        const std::string& xi = final_cfg[i - 1];
        for (std::size_t t = 0; t < trace.size(); ++t) {
            const std::string& cand = trace[t][i - 1];
            if (cand != xi && g.before(LineOrder::right, cand, xi))
                throw SpliceError("splice hypothesis fails at i=" + std::to_string(i) +
                                      ": traversed configuration " + std::to_string(t) + " " +
                                      join_ids(trace[t]) + " puts '" + cand +
                                      "' left of '" + xi + "' in the right-endpoint order",
                                  trace[t], t);
        }
    }
    if (j <= l) {
        const std::string& xj = final_cfg[j - 1];
        for (std::size_t t = 0; t < trace.size(); ++t) {
            const std::string& cand = trace[t][j - 1];
            if (cand != xj && g.before(LineOrder::left, xj, cand))
                throw SpliceError("splice hypothesis fails at j=" + std::to_string(j) +
                                      ": traversed configuration " + std::to_string(t) + " " +
                                      join_ids(trace[t]) + " puts '" + cand +
                                      "' right of '" + xj + "' in the left-endpoint order",
                                  trace[t], t);
        }
    }

    SpliceResult out;
    out.start.reserve(l);
    for (std::size_t p = 1; p <= l; ++p) {
        if (p <= i || p >= j)
            out.start.push_back(final_cfg[p - 1]);
        else
            out.start.push_back(start[p - 1]);
    }
    if (!is_valid_configuration(g, out.start))
        throw InternalError("splice produced a non-configuration " + join_ids(out.start) +
                            " despite verified hypotheses");
    for (std::size_t step = 0; step < s.size(); ++step)
        if (moved_pos[step] > i && moved_pos[step] < j)
            out.seq.push_back(s[step]);
    return out;
}

} // namespace tokenslide
