#include "tokenslide/solver.hpp"

#include "tokenslide/token_pushing.hpp"

#include <string>
#include <vector>

namespace tokenslide {

namespace {

// Phi = j + 2 * sum_i [ pos_left(rext_i) + (n - pos_right(lext_i) + 1) ].
// Every sweep iteration either advances j or improves an extreme pointer
// while j drops by one; both raise Phi, and Phi can never exceed 4nk + k.
long long potential(const IntervalGraph& g, const std::vector<std::string>& lext,
                    const std::vector<std::string>& rext, std::size_t j) {
    const long long n = static_cast<long long>(g.size());
    long long sum = 0;
    for (std::size_t i = 0; i < lext.size(); ++i) {
        sum += static_cast<long long>(g.position(LineOrder::left, rext[i]));
        sum += n - static_cast<long long>(g.position(LineOrder::right, lext[i])) + 1;
    }
    return static_cast<long long>(j) + 2 * sum;
}

} // namespace

std::size_t max_sweep_rounds(std::size_t n, std::size_t k) { return 4 * n * k + k; }

std::size_t sequence_length_bound(std::size_t n, std::size_t k) {
    return 8 * k * n * n + 2 * k * n;
}

ExtremeResult reconfigure_to_extreme(const IntervalGraph& g, std::size_t k,
                                     const Configuration& start) {
    if (k < 2)
        throw InputError("reconfigure_to_extreme needs k >= 2 (canonical_form covers k = 1)");
    Configuration a = make_configuration(g, start);
    if (a.size() != k)
        throw InputError("start has " + std::to_string(a.size()) + " tokens, expected " +
                         std::to_string(k));

    const std::size_t n = g.size();
    std::vector<std::string> lext = a; // lext[i]: leftmost value seen at position i+1
    std::vector<std::string> rext = a; // rext[i]: rightmost value seen at position i+1
    ReconfigSequence acc;
    std::size_t j = 1; // 1-based pair index (j, j+1)
    std::size_t rounds = 0;
    long long phi = potential(g, lext, rext, j);

    while (j < k) {
        if (++rounds > max_sweep_rounds(n, k))
            throw InternalError("extreme sweep exceeded its " +
                                std::to_string(max_sweep_rounds(n, k)) + " iteration bound");

        VertexSet removed;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == j - 1 || i == j)
                continue;
            VertexSet nbhd = g.closed_neighborhood(a[i]);
            removed.insert(nbhd.begin(), nbhd.end());
        }
        PushApartResult pushed = push_apart(g.without(removed), {a[j - 1], a[j]});
        acc.insert(acc.end(), pushed.seq.begin(), pushed.seq.end());
        const std::string& new_lo = pushed.config[0];
        const std::string& new_hi = pushed.config[1];
        a[j - 1] = new_lo;
        a[j] = new_hi;

        long gamma = 1;
        if (new_lo != lext[j - 1] || new_hi != rext[j]) {
            if (new_lo != lext[j - 1] && !g.before(LineOrder::right, new_lo, lext[j - 1]))
                throw InternalError("position " + std::to_string(j) +
                                    " extreme pointer moved right: " + lext[j - 1] + " -> " +
                                    new_lo);
            if (new_hi != rext[j] && !g.before(LineOrder::left, rext[j], new_hi))
                throw InternalError("position " + std::to_string(j + 1) +
                                    " extreme pointer moved left: " + rext[j] + " -> " + new_hi);
            lext[j - 1] = new_lo;
            rext[j] = new_hi;
            if (j > 1)
                gamma = -1;
        }

        // The tokens are exactly the recorded extremes split at j.
        for (std::size_t p = 0; p < k; ++p) {
            const std::string& expect = p < j ? lext[p] : rext[p];
            if (a[p] != expect)
                throw InternalError("token " + std::to_string(p + 1) +
                                    " disagrees with its extreme pointer: " + a[p] + " vs " +
                                    expect);
        }

        j = static_cast<std::size_t>(static_cast<long>(j) + gamma);
        long long phi_next = potential(g, lext, rext, j);
        if (phi_next <= phi)
            throw InternalError("sweep potential did not increase: " + std::to_string(phi) +
                                " -> " + std::to_string(phi_next));
        if (phi_next > static_cast<long long>(max_sweep_rounds(n, k)))
            throw InternalError("sweep potential " + std::to_string(phi_next) +
                                " exceeds its ceiling " +
                                std::to_string(max_sweep_rounds(n, k)));
        phi = phi_next;
    }

    if (acc.size() > sequence_length_bound(n, k))
        throw InternalError("extreme sweep emitted " + std::to_string(acc.size()) +
                            " slides, above the bound " +
                            std::to_string(sequence_length_bound(n, k)));
    return {a, acc, rounds};
}

ExtremeResult canonical_form(const IntervalGraph& g, std::size_t k, const Configuration& start) {
    if (k < 1)
        throw InputError("k must be at least 1");
    Configuration cfg = make_configuration(g, start);
    if (cfg.size() != k)
        throw InputError("configuration has " + std::to_string(cfg.size()) +
                         " tokens, expected " + std::to_string(k));
    if (k == 1) {
        PushResult pushed = push_token_right(g, cfg[0]);
        return {{pushed.target}, pushed.seq, 0};
    }
    return reconfigure_to_extreme(g, k, cfg);
}

Decision decide_and_construct(const IntervalGraph& g, std::size_t k, const Configuration& I,
                              const Configuration& J) {
    ExtremeResult from = canonical_form(g, k, I);
    ExtremeResult to = canonical_form(g, k, J);
    Decision out;
    out.canonical_start = from.extreme;
    out.canonical_target = to.extreme;
    out.reconfigurable = from.extreme == to.extreme;
    if (out.reconfigurable) {
        out.seq = std::move(from.seq);
        ReconfigSequence back = reverse_sequence(to.seq);
        out.seq.insert(out.seq.end(), back.begin(), back.end());
    }
    return out;
}

} // namespace tokenslide
