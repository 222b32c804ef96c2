#include <gtest/gtest.h>

#include "girthkit/generate.hpp"
#include "girthkit/girth_weighted.hpp"
#include "girthkit/oracle.hpp"
#include "support/brute.hpp"

using namespace girthkit;
using namespace girthkit::oracle;

namespace {

DirectedGraph two_cycle() { return build_graph(2, {{0, 1, 5}, {1, 0, 7}}, true); }

SampleSets samples_for(const DirectedGraph& g, LandmarkSample& q, int i, double eps, std::uint64_t seed,
                       const SamplingConstants& c = SamplingConstants::defaults()) {
    GeneralSampleParams p;
    p.i = i;
    p.epsilon = eps;
    p.beta = 1 + eps;
    p.alpha = 0.5;
    return build_samples_general(g, p, q.table, seed, c);
}

void check_spanner_shape(const DirectedGraph& g, const SpannerSubgraph& h) {
    ASSERT_EQ(h.edges.size(), h.provenance.size());
    EXPECT_TRUE(std::is_sorted(h.edges.begin(), h.edges.end()));
    EXPECT_EQ(std::adjacent_find(h.edges.begin(), h.edges.end()), h.edges.end());
    for (EdgeId e : h.edges) EXPECT_LT(e, g.m());
}

}  // namespace

TEST(ModDijkstra, TwoCycle) {
    auto g = two_cycle();
    const double eps = 0.25;
    DistanceScale scale(eps);
    int i = scale.level(12);
    ASSERT_LE(scale.power(i), 12.0);
    ASSERT_LT(12.0, scale.power(i + 1));
    auto q = sample_Q(g, 2, 1);
    auto s = samples_for(g, q, i, eps, 1);
    auto r = mod_dijkstra(g, 0, i, eps, s, q.table);
    EXPECT_EQ(r.cycle.weight, 12);
    EXPECT_EQ(walk_weight(g, r.cycle.walk), 12);
}

TEST(ModDijkstra, NothingBelowHorizon) {
    auto g = directed_cycle(20);
    const double eps = 0.25;
    SampleSets empty;
    LandmarkTable lt(g);
    for (int i = 0; i < 8; ++i) {
        ASSERT_LT(DistanceScale(eps).power(i + 1), 20.0);
        EXPECT_FALSE(is_finite(mod_dijkstra(g, 0, i, eps, empty, lt).cycle.weight));
    }
    EXPECT_EQ(mod_dijkstra(g, 0, 14, eps, empty, lt).cycle.weight, 20);
    EXPECT_THROW(mod_dijkstra(g, 0, 1, 0.0, empty, lt), Error);
}

TEST(ModDijkstra, SoundAndBoundedWork) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto g = directed_gnm(80, 320, WeightModel::uniform(20), seed);
        const double eps = 0.25;
        auto q = sample_Q(g, 3, seed);
        for (int i : {4, 8, 12}) {
            auto s = samples_for(g, q, i, eps, seed, SamplingConstants::scaled(0.05));
            for (Vertex u = 0; u < g.n(); ++u) {
                auto r = mod_dijkstra(g, u, i, eps, s, q.table, {}, true);
                EXPECT_LE(r.stats.expanded + r.stats.filtered, r.stats.extracted);
                EXPECT_LE(r.stats.levels, i + 1);
                EXPECT_LE(r.stats.extracted, g.n());
                if (is_finite(r.cycle.weight)) {
                    EXPECT_EQ(r.cycle.walk[0], u);
                    EXPECT_EQ(brute::walk_weight(g, r.cycle.walk), r.cycle.weight);
                    EXPECT_GE(r.cycle.weight, shortest_cycle_through(g, u).weight);
                }
                for (EdgeId e : r.tree) EXPECT_LT(e, g.m());
            }
        }
    }
}

TEST(GirthApproxWeighted, Examples) {
    EXPECT_EQ(girth_approx_weighted(two_cycle(), 0.1, 1).estimate, 12);
    auto r = girth_approx_weighted(directed_cycle(6), 0.25, 1);
    EXPECT_GE(r.estimate, 6);
    EXPECT_LE(double(r.estimate), 13.5);
    EXPECT_FALSE(girth_approx_weighted(build_graph(3, {{0, 1, 4}, {1, 2, 4}}, true), 0.25, 1).finite());
    EXPECT_THROW(girth_approx_weighted(two_cycle(), -0.5, 1), Error);
    EXPECT_DOUBLE_EQ(r.factor, 2.25);
}

TEST(GirthApproxWeighted, FactorAndSoundness) {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        auto g = directed_gnm(100, 400, WeightModel::uniform(50), seed);
        const Weight truth = brute::girth(g);
        for (auto c : {SamplingConstants::defaults(), SamplingConstants::scaled(0.02)}) {
            WeightedOptions opt;
            opt.constants = c;
            WeightedTrace trace;
            auto r = girth_approx_weighted(g, 0.25, seed, opt, &trace);
            ASSERT_TRUE(r.finite());
            EXPECT_GE(r.estimate, truth);
            EXPECT_EQ(brute::walk_weight(g, r.witness), r.estimate);
            if (c.landmark_factor == SamplingConstants::defaults().landmark_factor) {
                EXPECT_LE(double(r.estimate), 2.25 * double(truth));
            }
        }
    }
}

TEST(GirthApproxWeighted, TraceRadiusBound) {
    auto g = directed_gnm(120, 480, WeightModel::uniform(30), 3);
    WeightedOptions opt;
    opt.constants = SamplingConstants::scaled(0.03);
    opt.per_component = false;
    WeightedTrace trace;
    auto r = girth_approx_weighted(g, 0.5, 7, opt, &trace);
    DistanceScale scale(0.5);
    ASSERT_TRUE(is_finite(trace.min_radius));
    EXPECT_EQ(trace.i, scale.level(trace.min_radius) - 1);
    EXPECT_LE(double(r.estimate), 2 * scale.power(trace.i + 2));
    EXPECT_GT(trace.landmarks, 0u);
}

TEST(GirthApproxWeighted, Deterministic) {
    auto g = directed_gnm(150, 600, WeightModel::uniform(40), 12);
    WeightedOptions opt;
    opt.constants = SamplingConstants::scaled(0.02);
    auto a = girth_approx_weighted(g, 0.25, 5, opt), b = girth_approx_weighted(g, 0.25, 5, opt);
    EXPECT_EQ(a.estimate, b.estimate);
    EXPECT_EQ(a.witness, b.witness);
}

TEST(Spanner, GridStretch) {
    auto g = bidirected_grid(5, 5);
    auto h = build_roundtrip_spanner(g, 0.25, 1);
    check_spanner_shape(g, h);
    EXPECT_DOUBLE_EQ(h.stretch, 8.0);
    EXPECT_TRUE(verify_spanner(g, h, 5 + 12 * 0.25).ok);
}

TEST(Spanner, StretchOnWeightedGnm) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        auto g = directed_gnm(120, 1200, WeightModel::uniform(20), seed);
        for (auto c : {SamplingConstants::defaults(), SamplingConstants::scaled(0.01)}) {
            SpannerOptions opt;
            opt.constants = c;
            auto h = build_roundtrip_spanner(g, 0.25, seed, opt);
            check_spanner_shape(g, h);
            EXPECT_TRUE(verify_spanner(g, h, 8.0).ok);
            EXPECT_LE(h.edge_count(), g.m());
        }
    }
}

TEST(Spanner, ProvenanceRecordsTrees) {
    auto g = directed_gnm(100, 600, WeightModel::uniform(10), 2);
    SpannerOptions opt;
    opt.constants = SamplingConstants::scaled(0.01);
    auto h = build_roundtrip_spanner(g, 0.5, 3, opt);
    bool landmark = false;
    for (const auto& p : h.provenance) {
        EXPECT_LT(p.source, g.n());
        landmark = landmark || p.kind == ProvenanceKind::LandmarkTree;
    }
    EXPECT_TRUE(landmark);
}

TEST(Spanner, EpsilonRange) {
    auto g = bidirected_grid(3, 3);
    EXPECT_THROW(build_roundtrip_spanner(g, 1.5, 1), Error);
    EXPECT_THROW(build_roundtrip_spanner(g, 0, 1), Error);
    auto h = build_roundtrip_spanner_for_stretch(g, 1.2, 1);
    EXPECT_DOUBLE_EQ(h.epsilon, 0.1);
    EXPECT_DOUBLE_EQ(h.stretch, 6.2);
}

TEST(FindW, Examples) {
    EXPECT_EQ(find_W(build_graph(3, {{0, 1, 1}, {1, 2, 2}, {2, 0, 3}}, true)), 3);
    auto two = build_graph(4, {{0, 1, 5}, {1, 0, 1}, {2, 3, 9}, {3, 2, 1}}, true);
    EXPECT_EQ(find_W(two), 5);
    try {
        find_W(build_graph(3, {{0, 1, 1}, {1, 2, 1}}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::Acyclic);
    }
}

TEST(FindW, MatchesLinearScan) {
    Rng rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = brute::random_digraph(3 + rng.below(10), 0.3, 40, rng);
        if (brute::girth(g) >= brute::kInf) continue;
        Weight want = 0;
        for (Weight w = 1; w <= 40 && !want; ++w) {
            std::vector<Edge> light;
            for (const Edge& e : g.edges())
                if (e.weight <= w) light.push_back(e);
            if (brute::girth(build_graph(g.n(), light, true)) < brute::kInf) want = w;
        }
        EXPECT_EQ(find_W(g), want);
    }
}

TEST(Rescale, UnitGraph) {
    auto g = directed_cycle(10);
    auto s = rescale_for_strong_polytime(g, 0.1, 1);
    EXPECT_EQ(s.W, 1);
    EXPECT_DOUBLE_EQ(s.R, 0.01);
    for (const Edge& e : s.graph.edges()) EXPECT_EQ(e.weight, 100);
    EXPECT_THROW(rescale_for_strong_polytime(g, 0.1, 0), Error);
}

TEST(Rescale, SingleHeavyEdge) {
    auto g = build_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 9}}, true);
    EXPECT_EQ(rescale_for_strong_polytime(g, 0.5, 2).W, 9);
}

TEST(Rescale, PerCycleInequalityAndDiscard) {
    Rng rng(71);
    for (int trial = 0; trial < 150; ++trial) {
        auto g = brute::random_digraph(3 + rng.below(6), 0.35, 1000, rng);
        if (brute::girth(g) >= brute::kInf) continue;
        const double eps = 0.1 + 0.4 * rng.unit();
        const int k = 1 + int(rng.below(3));
        auto s = rescale_for_strong_polytime(g, eps, k);
        EXPECT_EQ(s.kept.size() + s.discarded.size(), g.m());
        for (EdgeId e : s.discarded) EXPECT_GT(double(g.edge(e).weight), 3.0 * k * g.n() * s.W);
        brute::for_each_simple_cycle(g, [&](const std::vector<Vertex>& c) {
            std::vector<Weight> wh;
            Weight wg = 0, whs = 0;
            bool kept = true;
            for (std::size_t p = 0; p < c.size(); ++p) {
                Vertex a = c[p], b = c[(p + 1) % c.size()];
                wg += g.edge(*g.find_edge(a, b)).weight;
                auto he = s.graph.find_edge(a, b);
                if (!he) {
                    kept = false;
                    break;
                }
                whs += s.graph.edge(*he).weight;
            }
            if (!kept) return;
            const double lhs = double(wg) - s.R * double(c.size());
            EXPECT_LE(lhs, s.R * double(whs) + 1e-6);
            EXPECT_LE(s.R * double(whs), double(wg) + 1e-6);
        });
    }
}
