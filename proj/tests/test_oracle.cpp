#include <gtest/gtest.h>

#include "girthkit/generate.hpp"
#include "girthkit/oracle.hpp"
#include "support/brute.hpp"

using namespace girthkit;
using namespace girthkit::oracle;

TEST(ExactGirth, Triangle) {
    auto r = exact_girth(build_graph(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}}));
    EXPECT_EQ(r.estimate, 3);
    EXPECT_EQ(r.witness, (std::vector<Vertex>{0, 1, 2}));
    EXPECT_EQ(r.guarantee, Guarantee::Exact);
}

TEST(ExactGirth, Dag) {
    EXPECT_FALSE(exact_girth(build_graph(3, {{0, 1, 1}, {1, 2, 1}})).finite());
}

TEST(ExactGirth, GnmFixture) {
    // frozen from an independent Bellman-Ford girth
    auto g = directed_gnm(80, 320, WeightModel::unit(), 11);
    auto r = exact_girth(g);
    EXPECT_EQ(r.estimate, 2);
    EXPECT_EQ(walk_weight(g, r.witness), r.estimate);
}

TEST(ExactGirth, MatchesEnumerationSmall) {
    Rng rng(2024);
    for (int trial = 0; trial < 600; ++trial) {
        std::size_t n = 2 + rng.below(7);
        Weight maxw = trial % 2 ? 3 : 1;
        auto g = brute::random_digraph(n, 0.15 + 0.4 * rng.unit(), maxw, rng);
        auto r = exact_girth(g);
        EXPECT_EQ(r.estimate, std::min(brute::simple_cycles(g).min_weight, kInfinity));
        if (r.finite()) {
            EXPECT_EQ(brute::walk_weight(g, r.witness), r.estimate);
        }
    }
}

TEST(ExactRoundtrip, Examples) {
    auto two = exact_roundtrip(build_graph(2, {{0, 1, 5}, {1, 0, 7}}, true));
    EXPECT_EQ(two.rt(0, 1), 12);
    auto apart = exact_roundtrip(build_graph(2, {{0, 1, 1}}));
    EXPECT_FALSE(is_finite(apart.rt(0, 1)));
    auto grid = exact_roundtrip(bidirected_grid(4, 4));
    for (Vertex u = 0; u < 16; ++u)
        for (Vertex v = 0; v < 16; ++v) EXPECT_EQ(grid.rt(u, v), grid.rt(v, u));
}

TEST(ExactRoundtrip, CapExceeded) {
    try {
        exact_roundtrip(directed_cycle(20), 10);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::CapExceeded);
    }
}

TEST(ExactRoundtrip, MatchesFloydAndTriangleInequality) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto g = directed_gnm(30, 90, WeightModel::uniform(7), seed);
        auto rm = exact_roundtrip(g);
        auto d = brute::all_pairs(g);
        for (Vertex u = 0; u < 30; ++u)
            for (Vertex v = 0; v < 30; ++v) {
                EXPECT_EQ(rm.d(u, v), d[u][v] >= brute::kInf ? kInfinity : d[u][v]);
                EXPECT_EQ(rm.d(u, u), 0);
                for (Vertex w = 0; w < 30; ++w)
                    if (is_finite(rm.d(u, v)) && is_finite(rm.d(v, w))) {
                        EXPECT_LE(rm.d(u, w), rm.d(u, v) + rm.d(v, w));
                    }
            }
    }
}

TEST(VerifySpanner, IdentityIsOk) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto g = directed_gnm(40, 160, WeightModel::uniform(5), seed);
        SpannerSubgraph h;
        for (EdgeId e = 0; e < g.m(); ++e) h.edges.push_back(e);
        EXPECT_TRUE(verify_spanner(g, h, 1.0).ok);
        EXPECT_TRUE(verify_spanner(g, g, 1.0).ok);
    }
}

TEST(VerifySpanner, StarOutTreeViolates) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= 5; ++v) {
        edges.push_back({0, v, 1});
        edges.push_back({v, 0, 1});
    }
    auto g = build_graph(6, edges);
    SpannerSubgraph h;
    for (Vertex v = 1; v <= 5; ++v) h.edges.push_back(*g.find_edge(0, v));
    std::sort(h.edges.begin(), h.edges.end());
    auto check = verify_spanner(g, h, 1.0);
    EXPECT_FALSE(check.ok);
    EXPECT_FALSE(is_finite(check.rt_h));
}

TEST(VerifySpanner, NotASubgraph) {
    auto g = directed_cycle(4);
    SpannerSubgraph h;
    h.edges = {0, 99};
    try {
        verify_spanner(g, h, 1.0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotASubgraph);
    }
    EXPECT_THROW(verify_spanner(g, build_graph(4, {{0, 2, 1}}), 1.0), Error);
}
