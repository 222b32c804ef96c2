#include <gtest/gtest.h>

#include "girthkit/generate.hpp"
#include "girthkit/oracle.hpp"
#include "girthkit/sampling.hpp"
#include "support/brute.hpp"

using namespace girthkit;
using namespace girthkit::oracle;

namespace {

DirectedGraph triangle() { return build_graph(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}}); }

}  // namespace

TEST(SampleQ, CapsAtPopulation) {
    auto g = directed_cycle(10);
    const auto c = SamplingConstants::defaults();
    std::size_t size = capped_count(c.landmark_factor * std::sqrt(10.0) * log_n(10), 10);
    EXPECT_EQ(size, 10u);
    auto q = sample_Q(g, size, 1);
    EXPECT_EQ(q.table.size(), 10u);
}

TEST(SampleQ, Deterministic) {
    auto g = directed_gnm(200, 800, {}, 2);
    auto a = sample_Q(g, 20, 5), b = sample_Q(g, 20, 5), c = sample_Q(g, 20, 6);
    EXPECT_EQ(a.table.landmarks(), b.table.landmarks());
    EXPECT_NE(a.table.landmarks(), c.table.landmarks());
}

TEST(SampleQ, TriangleRoundtrip) {
    auto g = triangle();
    for (std::size_t size = 1; size <= 3; ++size) {
        auto q = sample_Q(g, size, 3);
        auto probe = probe_landmarks(g, q.table, q.q);
        EXPECT_EQ(probe.best_roundtrip.estimate, 3);
        EXPECT_EQ(walk_weight(g, probe.best_roundtrip.witness), 3);
    }
}

TEST(LandmarkTable, DistancesMatchOracleBothViews) {
    auto g = directed_gnm(50, 200, WeightModel::uniform(6), 8);
    auto rm = exact_roundtrip(g);
    LandmarkTable lt(g);
    std::vector<Vertex> picks{3, 17, 3, 40};
    auto idx = lt.add(picks);
    EXPECT_EQ(lt.size(), 3u);
    EXPECT_EQ(idx[0], idx[2]);
    auto rev = lt.reversed_view();
    for (std::uint32_t k = 0; k < lt.size(); ++k)
        for (Vertex v = 0; v < g.n(); ++v) {
            EXPECT_EQ(lt.from(k, v), rm.d(lt.landmark(k), v));
            EXPECT_EQ(lt.to(k, v), rm.d(v, lt.landmark(k)));
            EXPECT_EQ(rev.from(k, v), lt.to(k, v));
        }
}

TEST(Vprime, TriangleExamples) {
    auto g = triangle();
    LandmarkTable lt(g);
    std::vector<Vertex> zero{0};
    auto q = lt.add(zero);
    EXPECT_EQ(compute_Vprime(lt, q, 3, 3), (std::vector<bool>{true, true, true}));
    EXPECT_EQ(compute_Vprime(lt, q, 3, 1), (std::vector<bool>{false, false, false}));
}

TEST(Vprime, MatchesOracleDistances) {
    auto g = directed_gnm(60, 240, {}, 5);
    auto rm = exact_roundtrip(g);
    const Weight girth = exact_girth(g).estimate;
    auto q = sample_Q(g, 6, 9);
    for (double radius : {double(girth), double(girth) + 1, double(girth) - 1}) {
        auto in = compute_Vprime(q.table, q.q, g.n(), radius);
        auto inside = [&](Vertex s, Vertex v) {
            return is_finite(rm.d(s, v)) && is_finite(rm.d(v, s)) && rm.d(s, v) <= radius && rm.d(v, s) <= radius;
        };
        bool any = false;
        for (Vertex v = 0; v < g.n(); ++v) {
            bool want = false;
            for (Vertex s : q.table.landmarks()) {
                bool partner = false;
                for (Vertex x = 0; x < g.n(); ++x)
                    if (x != s && inside(s, x)) partner = true;
                if (v != s ? inside(s, v) : partner) want = true;
            }
            EXPECT_EQ(in[v], want) << v;
            any = any || want;
        }
        EXPECT_EQ(std::find(in.begin(), in.end(), true) != in.end(), any);
    }
}

TEST(SamplesUnweighted, TriangleBall) {
    auto g = triangle();
    auto q = sample_Q(g, 3, 1);
    auto s = build_samples_unweighted(g, 1, q.table, 1);
    for (Vertex u = 0; u < 3; ++u)
        for (auto k : s.R(u, 1)) EXPECT_LE(q.table.to(k, u), 1);
    EXPECT_THROW(build_samples_unweighted(g, 0, q.table, 1), Error);
}

TEST(SamplesUnweighted, EarlyExitTakesWholeBall) {
    // default constants on C_30: every sample set is V and every ball is below
    // the per-round size, so R^j(u) is the closed ball after one round
    auto g = directed_cycle(30);
    auto q = sample_Q(g, 30, 1);
    auto s = build_samples_unweighted(g, 4, q.table, 1);
    for (Vertex u = 0; u < 30; ++u)
        for (std::size_t j = 1; j <= 4; ++j) {
            std::vector<Vertex> got;
            for (auto k : s.R(u, j)) got.push_back(q.table.landmark(k));
            std::sort(got.begin(), got.end());
            std::vector<Vertex> want;
            for (std::size_t d = 0; d <= j; ++d) want.push_back(static_cast<Vertex>((u + d) % 30));
            std::sort(want.begin(), want.end());
            EXPECT_EQ(got, want);
            EXPECT_EQ(s.rounds_used[u * s.slots + j], 1u);
        }
}

TEST(SamplesUnweighted, MembershipSizeDeterminism) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        auto g = directed_gnm(200, 800, {}, seed);
        auto rm = exact_roundtrip(g);
        auto c = SamplingConstants::scaled(0.02);
        auto q = sample_Q(g, 5, seed);
        auto s = build_samples_unweighted(g, 3, q.table, seed, c);
        const std::size_t cap = c.rounds(200) * c.per_round(200);
        for (Vertex u = 0; u < 200; ++u) {
            EXPECT_TRUE(s.R(u, 0).empty());
            for (std::size_t j = 1; j <= 3; ++j) {
                EXPECT_LE(s.R(u, j).size(), cap);
                for (auto k : s.R(u, j)) EXPECT_LE(rm.d(u, q.table.landmark(k)), Weight(j));
            }
        }
        auto q2 = sample_Q(g, 5, seed);
        auto s2 = build_samples_unweighted(g, 3, q2.table, seed, c);
        EXPECT_EQ(s.sets, s2.sets);
        EXPECT_EQ(q.table.landmarks(), q2.table.landmarks());
    }
}

TEST(SamplesGeneral, MembershipAndExclusion) {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        auto g = directed_gnm(150, 700, WeightModel::uniform(20), seed);
        auto rm = exact_roundtrip(g);
        auto c = SamplingConstants::scaled(0.05);
        auto q = sample_Q(g, 4, seed);
        GeneralSampleParams p;
        p.i = 5;
        p.epsilon = 0.5;
        p.beta = 1.5;
        p.alpha = 0.5;
        p.excluded.assign(150, false);
        for (Vertex v = 0; v < 150; v += 7) p.excluded[v] = true;
        auto s = build_samples_general(g, p, q.table, seed, c);
        DistanceScale scale(0.5);
        const std::size_t cap = c.rounds(150) * c.per_round(150);
        EXPECT_EQ(s.slots, 7u);
        for (Vertex u = 0; u < 150; ++u)
            for (std::size_t slot = 0; slot < s.slots; ++slot) {
                if (p.excluded[u]) {
                    EXPECT_TRUE(s.R(u, slot).empty());
                }
                EXPECT_LE(s.R(u, slot).size(), cap);
                for (auto k : s.R(u, slot)) {
                    Vertex x = q.table.landmark(k);
                    EXPECT_FALSE(p.excluded[x]);
                    Weight d = rm.d(u, x);
                    if (slot == 0) {
                        EXPECT_EQ(d, 0);
                    } else {
                        EXPECT_LT(double(d), scale.power(int(slot)));
                    }
                }
            }
        auto q2 = sample_Q(g, 4, seed);
        EXPECT_EQ(build_samples_general(g, p, q2.table, seed, c).sets, s.sets);
    }
}

TEST(SamplesGeneral, FullExclusionGivesEmptySets) {
    auto g = directed_gnm(40, 160, WeightModel::uniform(5), 1);
    auto q = sample_Q(g, 40, 1);
    GeneralSampleParams p;
    p.i = 3;
    p.excluded.assign(40, true);
    auto s = build_samples_general(g, p, q.table, 1);
    for (const auto& set : s.sets) EXPECT_TRUE(set.empty());
}

TEST(SamplesGeneral, RejectsBadParameters) {
    auto g = directed_cycle(5);
    auto q = sample_Q(g, 5, 1);
    GeneralSampleParams p;
    p.i = -1;
    EXPECT_THROW(build_samples_general(g, p, q.table, 1), Error);
    p.i = 1;
    p.alpha = 1.0;
    EXPECT_THROW(build_samples_general(g, p, q.table, 1), Error);
    p.alpha = 0.5;
    p.beta = 0;
    EXPECT_THROW(build_samples_general(g, p, q.table, 1), Error);
}

TEST(SetReduce, EmptySampleKeepsAll) {
    auto g = directed_cycle(20);
    std::vector<Vertex> S{1, 4, 7, 9};
    EXPECT_EQ(setreduce_check(S, {}, 3, g), S);
}

TEST(SetReduce, NotSubset) {
    auto g = directed_cycle(20);
    std::vector<Vertex> S{1, 4}, R{5};
    try {
        setreduce_check(S, R, 3, g);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::SampleNotSubset);
    }
}

TEST(SetReduce, CycleSegment) {
    auto g = directed_cycle(20);
    std::vector<Vertex> S(10);
    std::iota(S.begin(), S.end(), 0u);
    std::vector<Vertex> R{5};
    EXPECT_EQ(setreduce_check(S, R, 3, g), (std::vector<Vertex>{2, 3, 4, 5}));
    R = {5, 8};
    EXPECT_EQ(setreduce_check(S, R, 3, g), (std::vector<Vertex>{5}));
}

TEST(SetReduce, ConstantValue) { EXPECT_EQ(setreduce_constant(), 950u); }

TEST(SetReduce, ShrinksOnLowMutualReachability) {
    // C_500 with d = 290: every s has 81 mutual partners (<= 0.2|S|)
    auto g = directed_cycle(500);
    auto rm = exact_roundtrip(g);
    std::vector<Vertex> S(500);
    std::iota(S.begin(), S.end(), 0u);
    for (Vertex s : S) {
        std::size_t mutual = 0;
        for (Vertex v : S)
            if (rm.d(s, v) <= 290 && rm.d(v, s) <= 290) ++mutual;
        ASSERT_LE(mutual, 100u);
    }
    for (double c : {double(setreduce_constant()), 10.0}) {
        const std::size_t size = capped_count(c * log_n(500), 500);
        int good = 0;
        for (std::uint64_t trial = 0; trial < 200; ++trial) {
            Rng rng(derive_seed(trial, Stream::SampleDraw));
            std::vector<Vertex> R = rng.sample(S, size);
            if (setreduce_check(S, R, 290, g).size() <= 400) ++good;
        }
        EXPECT_GE(good, 190) << "c=" << c;
    }
}
