#pragma once

#include "tokenslide/generators.hpp"
#include "tokenslide/interval_graph.hpp"

#include <random>
#include <vector>

namespace fixtures {

// Two mirrored dumbbells: edges A-B and C-D only.
inline tokenslide::IntervalGraph g3() {
    using tokenslide::Rational;
    return tokenslide::build_graph({{"A", Rational(0), Rational(2)},
                                    {"B", Rational(1), Rational(3)},
                                    {"C", Rational(4), Rational(6)},
                                    {"D", Rational(5), Rational(7)}});
}

// Five intervals with fractional endpoints; c covers t and a, f hangs off b.
inline tokenslide::IntervalGraph g5() {
    using tokenslide::Rational;
    return tokenslide::build_graph({{"t", Rational(0), Rational(1)},
                                    {"c", Rational(1, 2), Rational(9, 2)},
                                    {"a", Rational(2), Rational(3)},
                                    {"b", Rational(4), Rational(5)},
                                    {"f", Rational(24, 5), Rational(7)}});
}

// Dense coordinate range so endpoint ties across intervals are common.
inline std::vector<tokenslide::Interval> crowded_intervals(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    const unsigned long long range = 2 * n + 2;
    std::vector<tokenslide::Interval> out;
    for (std::size_t i = 1; i <= n; ++i) {
        unsigned long long x = engine() % range;
        unsigned long long y = engine() % range;
        while (x == y)
            y = engine() % range;
        out.push_back({"x" + std::to_string(i),
                       tokenslide::Rational(static_cast<long long>(std::min(x, y))),
                       tokenslide::Rational(static_cast<long long>(std::max(x, y)))});
    }
    return out;
}

// Closed-interval intersection straight from the coordinates, ignoring the
// graph's symbolic tie-breaking; ground truth for adjacency tests.
inline bool closed_overlap(const tokenslide::Interval& u, const tokenslide::Interval& v) {
    return !(u.right < v.left) && !(v.right < u.left);
}

} // namespace fixtures
