#include <gtest/gtest.h>

#include "girthkit/generate.hpp"
#include "girthkit/oracle.hpp"
#include "girthkit/transform.hpp"
#include "support/brute.hpp"

using namespace girthkit;
using namespace girthkit::oracle;

namespace {

std::vector<unsigned> leaf_depths(const GadgetTree& t) {
    std::vector<unsigned> depth(t.node_count(), 0), out;
    std::vector<std::uint32_t> stack{0};
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        if (t.children[v].empty()) out.push_back(depth[v]);
        for (auto c : t.children[v]) {
            depth[c] = depth[v] + 1;
            stack.push_back(c);
        }
    }
    return out;
}

// Random simple digraph with n <= 40 and a spread of densities.
DirectedGraph sample_graph(Rng& rng, Weight max_w) {
    std::size_t n = 2 + rng.below(39);
    double p = (1.0 + rng.below(6 * n)) / (n * (n - 1.0)) * 2.0;
    return brute::random_digraph(n, std::min(p, 0.9), max_w, rng);
}

void expect_scaled_distances(const DirectedGraph& g, const ReducedGraph& rg) {
    auto d = brute::all_pairs(g);
    auto dr = exact_roundtrip(rg.graph, 100000);
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = 0; v < g.n(); ++v) {
            Weight want = d[u][v] >= brute::kInf ? kInfinity : d[u][v] * Weight(rg.scale);
            ASSERT_EQ(dr.d(u, v), want) << "pair " << u << "," << v;
        }
}

}  // namespace

TEST(GadgetTree, Examples) {
    auto t = build_gadget_tree(4, 2);
    EXPECT_EQ(t.node_count(), 7u);
    EXPECT_EQ(t.leaves.size(), 4u);
    EXPECT_EQ(t.depth, 2u);
    auto one = build_gadget_tree(1, 2);
    EXPECT_EQ(one.node_count(), 1u);
    EXPECT_EQ(one.depth, 0u);
    auto five = build_gadget_tree(5, 2);
    EXPECT_EQ(five.depth, 3u);
    EXPECT_LE(five.node_count(), 15u);
    for (unsigned d : leaf_depths(five)) EXPECT_EQ(d, 3u);
    EXPECT_THROW(build_gadget_tree(0, 2), Error);
    EXPECT_THROW(build_gadget_tree(3, 1), Error);
}

TEST(GadgetTree, ExhaustiveInvariants) {
    for (std::uint64_t q = 2; q <= 10; ++q)
        for (std::uint64_t L = 1; L <= 200; ++L) {
            auto t = build_gadget_tree(L, q);
            unsigned want = 0;
            for (std::uint64_t p = 1; p < L; p *= q) ++want;
            ASSERT_EQ(t.depth, want) << L << "," << q;
            ASSERT_EQ(t.leaves.size(), L);
            ASSERT_LE(t.node_count(), 3 * L);
            for (const auto& ch : t.children) ASSERT_LE(ch.size(), q);
            auto depths = leaf_depths(t);
            ASSERT_EQ(depths.size(), L);
            for (unsigned d : depths) ASSERT_EQ(d, want);
        }
}

TEST(ReduceUnweighted, TriangleScalesGirth) {
    auto g = build_graph(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
    auto rg = reduce_unweighted(g);
    EXPECT_EQ(rg.scale, 2u);
    EXPECT_EQ(exact_girth(rg.graph).estimate, 6);
}

TEST(ReduceUnweighted, UniformDepthOnHubs) {
    // out-degrees 9, 6, 3 with m = 21, n = 10, so q = 3 and t = 3
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= 9; ++v) edges.push_back({0, v, 1});
    for (Vertex v : {0u, 2u, 3u, 4u, 5u, 6u}) edges.push_back({1, v, 1});
    for (Vertex v : {0u, 1u, 3u}) edges.push_back({2, v, 1});
    edges.push_back({3, 4, 1});
    edges.push_back({4, 5, 1});
    edges.push_back({5, 3, 1});
    auto g = build_graph(10, edges);
    ASSERT_EQ(g.m(), 21u);
    auto rg = reduce_unweighted(g);
    EXPECT_EQ(rg.scale, 3u);
    for (Vertex u : {0u, 1u, 2u}) {
        auto d = brute::bellman_ford(rg.graph, u);
        for (const Arc& a : g.out(u)) EXPECT_EQ(d[a.other], 3) << u << "->" << a.other;
    }
    for (Vertex v = 0; v < rg.graph.n(); ++v) EXPECT_LE(rg.graph.out_degree(v), 3u);
}

TEST(ReduceUnweighted, GnmPairsScale) {
    auto g = directed_gnm(60, 300, WeightModel::unit(), 3);
    auto rg = reduce_unweighted(g);
    Rng rng(1);
    for (int k = 0; k < 20; ++k) {
        Vertex u = static_cast<Vertex>(rng.below(60)), v = static_cast<Vertex>(rng.below(60));
        auto d = brute::bellman_ford(g, u);
        auto dr = brute::bellman_ford(rg.graph, u);
        EXPECT_EQ(dr[v], d[v] >= brute::kInf ? brute::kInf : d[v] * Weight(rg.scale));
    }
}

TEST(ReduceUnweighted, AllPairsScalingAndDegree) {
    Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = sample_graph(rng, 1);
        auto rg = reduce_unweighted(g);
        const std::uint64_t q = std::max<std::uint64_t>(2, ceil_div(g.m(), g.n()));
        unsigned t = 0;
        for (std::uint64_t p = 1; p < g.n(); p *= q) ++t;
        EXPECT_EQ(rg.scale, std::max(1u, t));
        expect_scaled_distances(g, rg);
        for (Vertex v = 0; v < rg.graph.n(); ++v) ASSERT_LE(rg.graph.out_degree(v), q);
        Weight gg = brute::girth(g);
        EXPECT_EQ(exact_girth(rg.graph).estimate, gg >= brute::kInf ? kInfinity : gg * Weight(rg.scale));
    }
}

TEST(ReduceUnweighted, InDegreeOption) {
    Rng rng(32);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = sample_graph(rng, 1);
        auto base = reduce_unweighted(g);
        auto rg = reduce_unweighted(g, {.reduce_in_degree = true});
        EXPECT_EQ(rg.scale, 2 * base.scale - 1);
        expect_scaled_distances(g, rg);
        const std::uint64_t q = std::max<std::uint64_t>(2, ceil_div(g.m(), g.n()));
        for (Vertex v = 0; v < rg.graph.n(); ++v) {
            ASSERT_LE(rg.graph.out_degree(v), q);
            ASSERT_LE(rg.graph.in_degree(v), q);
        }
    }
}

TEST(ReduceUnweighted, RejectsWeighted) {
    EXPECT_THROW(reduce_unweighted(build_graph(2, {{0, 1, 2}, {1, 0, 1}}, true)), Error);
}

TEST(ReduceWeighted, TwoCycle) {
    auto rg = reduce_weighted(build_graph(2, {{0, 1, 5}, {1, 0, 7}}, true));
    EXPECT_EQ(exact_girth(rg.graph).estimate, 12);
}

TEST(ReduceWeighted, HubDegrees) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= 20; ++v) {
        edges.push_back({0, v, 1});
        edges.push_back({v, 0, 1});
    }
    auto g = build_graph(21, edges, true);
    auto rg = reduce_weighted(g);
    const std::size_t bound = weighted_degree_bound(g);
    EXPECT_EQ(bound, 3u);
    for (Vertex v = 0; v < rg.graph.n(); ++v)
        EXPECT_LE(rg.graph.out_degree(v) + rg.graph.in_degree(v), bound);
    EXPECT_EQ(exact_girth(rg.graph).estimate, 2);
}

TEST(ReduceWeighted, GnmPairsIdentical) {
    auto g = directed_gnm(60, 600, WeightModel::uniform(9), 4);
    auto rg = reduce_weighted(g);
    Rng rng(2);
    for (int k = 0; k < 20; ++k) {
        Vertex u = static_cast<Vertex>(rng.below(60)), v = static_cast<Vertex>(rng.below(60));
        EXPECT_EQ(brute::bellman_ford(rg.graph, u)[v], brute::bellman_ford(g, u)[v]);
    }
}

TEST(ReduceWeighted, AllPairsIdentityAndDegree) {
    Rng rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = sample_graph(rng, 9);
        auto rg = reduce_weighted(g);
        EXPECT_EQ(rg.scale, 1u);
        expect_scaled_distances(g, rg);
        const std::size_t bound = weighted_degree_bound(g);
        for (Vertex v = 0; v < rg.graph.n(); ++v)
            ASSERT_LE(rg.graph.out_degree(v) + rg.graph.in_degree(v), bound);
        Weight gg = brute::girth(g);
        EXPECT_EQ(exact_girth(rg.graph).estimate, gg >= brute::kInf ? kInfinity : gg);
    }
}

TEST(LiftCycle, ReducedTriangle) {
    auto g = build_graph(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
    auto rg = reduce_unweighted(g);
    auto r = exact_girth(rg.graph);
    ASSERT_EQ(r.witness.size(), 6u);
    auto lifted = lift_cycle(rg, g, r.witness);
    EXPECT_EQ(lifted.weight, 3);
    EXPECT_EQ(lifted.walk.size(), 3u);
    EXPECT_EQ(walk_weight(g, lifted.walk), 3);
}

TEST(LiftCycle, WeightedDetoursKeepWeight) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= 8; ++v) {
        edges.push_back({0, v, v});
        edges.push_back({v, 0, 2});
    }
    auto g = build_graph(9, edges, true);
    auto rg = reduce_weighted(g);
    auto r = exact_girth(rg.graph);
    auto lifted = lift_cycle(rg, g, r.witness);
    EXPECT_EQ(lifted.weight, r.estimate);
    EXPECT_EQ(lifted.weight, 3);
    EXPECT_EQ(walk_weight(g, lifted.walk), 3);
}

TEST(LiftCycle, RandomCertificatesMatchOracle) {
    Rng rng(51);
    for (int trial = 0; trial < 40; ++trial) {
        bool weighted = trial % 2;
        auto g = sample_graph(rng, weighted ? 9 : 1);
        Weight gg = brute::girth(g);
        if (gg >= brute::kInf) continue;
        auto rg = weighted ? reduce_weighted(g) : reduce_unweighted(g);
        auto r = exact_girth(rg.graph);
        auto lifted = lift_cycle(rg, g, r.witness);
        EXPECT_EQ(lifted.weight, gg);
        EXPECT_EQ(brute::walk_weight(g, lifted.walk), gg);
    }
}

TEST(LiftCycle, RejectsOpenWalk) {
    auto g = build_graph(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
    auto rg = reduce_unweighted(g);
    std::vector<Vertex> bad{0, 2};
    EXPECT_THROW(lift_cycle(rg, g, bad), Error);
}
