#include "tokenslide/generators.hpp"

#include "tokenslide/oracle.hpp"
#include "tokenslide/reconfiguration.hpp"

#include <doctest.h>

#include <map>
#include <set>

#include "fixtures.hpp"

using namespace tokenslide;

TEST_CASE("lower-bound family sizes and roles across a grid") {
    for (std::size_t m = 1; m <= 6; ++m) {
        for (std::size_t k = 1; k <= 4; ++k) {
            CAPTURE(m);
            CAPTURE(k);
            // gen_lower_bound itself cross-checks the realized adjacency
            // against the symbolic layout and throws when they disagree.
            LowerBoundInstance inst = gen_lower_bound(m, k);
            CHECK(inst.graph.size() == 8 * k + 2 * m - 5);
            CHECK(inst.I.size() == k);
            CHECK(inst.J.size() == k);
            CHECK(is_valid_configuration(inst.graph, inst.I));
            CHECK(is_valid_configuration(inst.graph, inst.J));

            const std::size_t N = m + 2 * k - 1;
            std::map<std::string, std::size_t> counts;
            for (const auto& [id, role] : inst.roles)
                ++counts[role];
            CHECK(counts["base-a"] == k - 1);
            CHECK(counts["base-v"] == N);
            CHECK(counts["base-b"] == k);
            CHECK(counts["path"] == N - 1);
            CHECK(counts["long-left"] == k - 1);
            CHECK(counts["long-right"] == k);
        }
    }
    CHECK_THROWS_AS(gen_lower_bound(0, 2), InputError);
    CHECK_THROWS_AS(gen_lower_bound(2, 0), InputError);
}

TEST_CASE("lower-bound layout geometry at m=6 k=3") {
    LowerBoundInstance inst = gen_lower_bound(6, 3);
    const IntervalGraph& g = inst.graph;

    // l_i starts inside a_i and ends inside v_{m+k-i}: it crosses exactly the
    // a's with smaller index and the v's up to its anchor.
    CHECK(g.adjacent("l1", "a1"));
    CHECK_FALSE(g.adjacent("l1", "a2"));
    CHECK(g.adjacent("l2", "a2"));
    CHECK(g.adjacent("l2", "a1"));
    CHECK(g.adjacent("l1", "v8"));
    CHECK_FALSE(g.adjacent("l1", "v9"));
    CHECK(g.adjacent("l2", "v7"));
    CHECK_FALSE(g.adjacent("l2", "v8"));
    // The open right end still reaches past v8's midpoint bridge.
    CHECK(g.adjacent("l1", "v8_9"));

    // r_i starts inside v_{k-i+1} and ends inside b_i.
    CHECK(g.adjacent("r3", "v1"));
    CHECK(g.adjacent("r3", "b1"));
    CHECK(g.adjacent("r3", "b2"));
    CHECK(g.adjacent("r3", "b3"));
    CHECK_FALSE(g.adjacent("r2", "b3"));
    CHECK_FALSE(g.adjacent("r3", "a1"));
    CHECK(g.adjacent("r1", "l1"));

    // Base intervals are pairwise disjoint; consecutive v's share only their
    // bridging path interval.
    CHECK_FALSE(g.adjacent("v1", "v2"));
    CHECK(g.adjacent("v1_2", "v1"));
    CHECK(g.adjacent("v1_2", "v2"));
    CHECK_FALSE(g.adjacent("v1_2", "v3"));

    CHECK(inst.I == Configuration{"v1", "v2", "v3"});
    CHECK(inst.J == Configuration{"b1", "b2", "b3"});
}

TEST_CASE("lower-bound distance exceeds the quadratic bound on small cases") {
    // Oracle distances for the desk-sized members; the acceptance suite pins
    // the exact values, here we only need the floor.
    for (auto [m, k] : std::vector<std::pair<std::size_t, std::size_t>>{
             {1, 2}, {2, 2}, {1, 3}}) {
        CAPTURE(m);
        CAPTURE(k);
        LowerBoundInstance inst = gen_lower_bound(m, k);
        AbstractGraph ag = AbstractGraph::from_interval_graph(inst.graph);
        BfsResult r = bfs_reconfigurable(ag, k, inst.I, inst.J);
        REQUIRE(r.reachable);
        REQUIRE(r.distance.has_value());
        CHECK(*r.distance >= (k * k * m + 3) / 4);
    }
}

TEST_CASE("random instances are reproducible and honest about adjacency") {
    IntervalGraph a = gen_random_interval(9, 12345);
    IntervalGraph b = gen_random_interval(9, 12345);
    REQUIRE(a.size() == 9);
    REQUIRE(b.size() == 9);
    for (const auto& id : a.vertex_ids()) {
        CHECK(a.interval(id).left == b.interval(id).left);
        CHECK(a.interval(id).right == b.interval(id).right);
    }
    CHECK(a.edges() == b.edges());

    IntervalGraph c = gen_random_interval(9, 54321);
    CHECK(a.edges() != c.edges());

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        IntervalGraph g = gen_random_interval(8, seed);
        auto ids = g.vertex_ids();
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                CHECK(g.adjacent(ids[i], ids[j]) ==
                      fixtures::closed_overlap(g.interval(ids[i]),
                                               g.interval(ids[j])));
    }
    CHECK_THROWS_AS(gen_random_interval(0, 1), InputError);
}

TEST_CASE("hwords are walks of the digraph") {
    Digraph h{{"p", "q"}, {{"p", "q"}, {"q", "p"}}};
    CHECK(is_hword(h, {"p"}));
    CHECK(is_hword(h, {"p", "q", "p"}));
    CHECK_FALSE(is_hword(h, {"p", "p"}));
    CHECK_FALSE(is_hword(h, {"z"}));
    CHECK_FALSE(is_hword(h, {}));

    auto words = enumerate_hwords(h, 2);
    REQUIRE(words.size() == 2);
    CHECK(words[0] == Word{"p", "q"});
    CHECK(words[1] == Word{"q", "p"});
    CHECK(enumerate_hwords(h, 3).size() == 2);

    Digraph loops{{"p", "q"}, {{"p", "p"}, {"p", "q"}, {"q", "p"}, {"q", "q"}}};
    CHECK(enumerate_hwords(loops, 3).size() == 8);
}

TEST_CASE("hardness instances reject malformed words") {
    Digraph h{{"p", "q"}, {{"p", "q"}, {"q", "p"}}};
    CHECK_THROWS_AS(gen_hardness(h, {"p", "q"}, {"q"}), InputError);
    try {
        gen_hardness(h, {"p", "p"}, {"q", "p"});
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("position 1") != std::string::npos);
    }
    CHECK_THROWS_AS(gen_hardness(h, {"p", "z"}, {"q", "p"}), InputError);
    Digraph bad{{"p", "p"}, {}};
    CHECK_THROWS_AS(gen_hardness(bad, {"p"}, {"p"}), InputError);
}

TEST_CASE("hardness instance on a single looped vertex") {
    Digraph h{{"x"}, {{"x", "x"}}};
    HardnessInstance inst = gen_hardness(h, {"x", "x"}, {"x", "x"});
    CHECK(inst.graph.size() == 2);
    CHECK(inst.graph.edge_list().empty());
    CHECK(inst.A == Configuration{"x@1", "x@2"});
    CHECK(inst.A == inst.B);
    BfsResult viaGraph = bfs_reconfigurable(inst.graph, 2, inst.A, inst.B);
    BfsResult viaWords = hword_reachability_oracle(h, {"x", "x"}, {"x", "x"});
    CHECK(viaGraph.reachable);
    CHECK(viaGraph.distance == 0);
    CHECK(viaWords.reachable);
    CHECK(viaWords.distance == 0);
}

TEST_CASE("hardness worked example: two letters, all edges") {
    Digraph h{{"p", "q"}, {{"p", "p"}, {"p", "q"}, {"q", "p"}, {"q", "q"}}};
    HardnessInstance inst = gen_hardness(h, {"p", "p"}, {"q", "q"});
    BfsResult viaGraph = bfs_reconfigurable(inst.graph, 2, inst.A, inst.B);
    BfsResult viaWords = hword_reachability_oracle(h, {"p", "p"}, {"q", "q"});
    REQUIRE(viaGraph.reachable);
    REQUIRE(viaWords.reachable);
    CHECK(*viaGraph.distance == 2);
    CHECK(*viaWords.distance == 2);
    CHECK(max_clique_size(inst.graph) <= inst.width_bound);
}

TEST_CASE("hardness worked example: loop-free two-cycle is rigid") {
    Digraph h{{"p", "q"}, {{"p", "q"}, {"q", "p"}}};
    HardnessInstance inst = gen_hardness(h, {"p", "q"}, {"q", "p"});
    BfsResult viaGraph = bfs_reconfigurable(inst.graph, 2, inst.A, inst.B);
    BfsResult viaWords = hword_reachability_oracle(h, {"p", "q"}, {"q", "p"});
    CHECK_FALSE(viaGraph.reachable);
    CHECK_FALSE(viaWords.reachable);
}

TEST_CASE("level-size independent sets are exactly the walks") {
    Digraph h{{"p", "q", "r"},
              {{"p", "q"}, {"q", "r"}, {"r", "p"}, {"p", "p"}}};
    for (std::size_t n = 1; n <= 3; ++n) {
        auto words = enumerate_hwords(h, n);
        REQUIRE(!words.empty());
        HardnessInstance inst = gen_hardness(h, words.front(), words.back());
        auto states = enumerate_configurations(inst.graph, n);
        CHECK(states.size() == words.size());
        // Every state takes one vertex per level.
        for (const auto& s : states) {
            std::set<char> levels;
            for (const auto& id : s)
                levels.insert(id.back());
            CHECK(levels.size() == n);
        }
    }
}

TEST_CASE("word moves and token slides induce the same metric") {
    Digraph h{{"p", "q", "r"},
              {{"p", "q"}, {"q", "r"}, {"r", "p"}, {"p", "p"}, {"r", "r"}}};
    const std::size_t n = 3;
    auto words = enumerate_hwords(h, n);
    REQUIRE(words.size() >= 4);
    for (const Word& a : words) {
        for (const Word& b : words) {
            HardnessInstance inst = gen_hardness(h, a, b);
            BfsResult viaGraph = bfs_reconfigurable(inst.graph, n, inst.A, inst.B);
            BfsResult viaWords = hword_reachability_oracle(h, a, b);
            CHECK(viaGraph.reachable == viaWords.reachable);
            if (viaGraph.reachable)
                CHECK(*viaGraph.distance == *viaWords.distance);
            CHECK(max_clique_size(inst.graph) <= inst.width_bound);
        }
    }
}
