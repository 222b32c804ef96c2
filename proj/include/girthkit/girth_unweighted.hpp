#ifndef GIRTHKIT_GIRTH_UNWEIGHTED_HPP
#define GIRTHKIT_GIRTH_UNWEIGHTED_HPP

#include <cmath>
#include <vector>

#include "girthkit/driver.hpp"
#include "girthkit/girth_weighted.hpp"
#include "girthkit/graph.hpp"
#include "girthkit/result.hpp"
#include "girthkit/sampling.hpp"
#include "girthkit/shortest_paths.hpp"
#include "girthkit/transform.hpp"

namespace girthkit {

// Minimum roundtrip through a uniform sample of f * n^(1-delta) * log n
// vertices. Exact when the sample is all of V.
inline GirthResult high_girth(const DirectedGraph& g, double delta, std::uint64_t seed,
                              const SamplingConstants& c = SamplingConstants::defaults(), unsigned threads = 0) {
    if (!(delta > 0 && delta < 1)) throw Error(Errc::InvalidParameters, "delta must lie in (0,1)");
    const std::size_t n = g.n();
    GirthResult res;
    res.algorithm = "high_girth";
    res.seed = seed;
    if (n == 0) return res;
    const std::size_t size = capped_count(c.high_girth_factor * std::pow(double(n), 1.0 - delta) * log_n(n), n);
    res.guarantee = size == n ? Guarantee::Exact : Guarantee::Factor;
    Rng rng(derive_seed(seed, Stream::HighGirth));
    auto picks = rng.sample_indices(n, size);
    std::sort(picks.begin(), picks.end());

    std::vector<CycleFound> found(picks.size());
    parallel_for(picks.size(), resolve_threads(threads), [&](std::size_t k) {
        const Vertex s = static_cast<Vertex>(picks[k]);
        ShortestPathTree t = shortest_paths(g, s, Direction::Out);
        Vertex last = kNoVertex;
        for (const Arc& a : g.in(s)) {
            if (!is_finite(t.dist[a.other])) continue;
            Weight w = t.dist[a.other] + a.weight;
            if (w < found[k].weight) {
                found[k].weight = w;
                last = a.other;
            }
        }
        if (last != kNoVertex) found[k].walk = tree_path(g, t, last);
    });
    for (auto& f : found)
        if (f.weight < res.estimate) res.offer(f.weight, std::move(f.walk));
    return res;
}

struct ModBfsResult {
    CycleFound cycle;
    SearchStats stats;
};

// Level-synchronous search from u for at most i levels. A vertex x in level j
// is expanded only if d(x,s) <= i for every s in R^j(u).
inline ModBfsResult mod_bfs(const DirectedGraph& g, Vertex u, int i, const SampleSets& samples,
                            const LandmarkTable& lt) {
    ModBfsResult out;
    std::vector<EdgeId> parent(g.n(), kNoEdge);
    std::vector<bool> visited(g.n(), false);
    visited[u] = true;
    std::vector<Vertex> level{u}, next;
    for (int j = 0; j < i && !level.empty(); ++j) {
        out.stats.levels = j + 1;
        next.clear();
        for (Vertex x : level) {
            ++out.stats.extracted;
            bool pass = true;
            for (std::uint32_t s : samples.R(u, static_cast<std::size_t>(j)))
                if (lt.to(s, x) > i) {
                    pass = false;
                    break;
                }
            if (!pass) {
                ++out.stats.filtered;
                continue;
            }
            ++out.stats.expanded;
            for (const Arc& a : g.out(x)) {
                if (a.other == u) {
                    out.cycle.weight = j + 1;
                    out.cycle.walk = walk_from_parents(g, parent, u, x);
                    return out;
                }
                if (visited[a.other]) continue;
                visited[a.other] = true;
                parent[a.other] = a.id;
                next.push_back(a.other);
            }
        }
        level.swap(next);
    }
    return out;
}

struct UnweightedOptions {
    double delta = 0.25;
    SamplingConstants constants = SamplingConstants::defaults();
    bool reduce = true;
    bool per_component = true;
    unsigned threads = 0;
};

struct UnweightedTrace {
    unsigned scale = 1;
    std::size_t reduced_n = 0;
    int i = 0;
    Weight g_high = kInfinity, g_med = kInfinity, g_search = kInfinity;
    std::size_t landmarks = 0;
};

namespace detail {

inline GirthResult unweighted_core(const DirectedGraph& input, std::uint64_t seed, const UnweightedOptions& opt,
                                   UnweightedTrace* trace) {
    const unsigned threads = resolve_threads(opt.threads);
    ReducedGraph rg = opt.reduce ? reduce_unweighted(input) : identity_reduction(input);
    const DirectedGraph& g = rg.graph;
    const std::size_t n = g.n();
    const int t = static_cast<int>(rg.scale);

    GirthResult res;
    res.algorithm = "approx2";
    res.seed = seed;
    res.guarantee = Guarantee::Factor;
    res.factor = 2.0;
    if (n == 0) return res;

    GirthResult high = high_girth(g, opt.delta, seed, opt.constants, threads);
    GirthResult best = high;

    const std::size_t qsize = capped_count(opt.constants.landmark_factor * std::sqrt(double(n)) * log_n(n), n);
    LandmarkSample q = sample_Q(g, qsize, seed, threads);
    LandmarkProbe probe = probe_landmarks(g, q.table, q.q);
    const Weight g_med = probe.best_roundtrip.estimate;
    if (probe.best_roundtrip.estimate < best.estimate)
        best.offer(probe.best_roundtrip.estimate, probe.best_roundtrip.witness);

    // smallest i with a landmark pair inside radius i+1, capped at n^(1/4)
    // original units
    const int cap = t * static_cast<int>(std::floor(std::pow(double(input.n()), 0.25)));
    int i = is_finite(probe.min_radius) ? static_cast<int>(probe.min_radius) - 1 : cap;
    i = std::min(i, cap);

    Weight g_search = kInfinity;
    if (i >= 1) {
        SampleSets samples = build_samples_unweighted(g, i, q.table, seed, opt.constants, threads);
        std::vector<CycleFound> found(n);
        parallel_for(n, threads, [&](std::size_t u) {
            found[u] = mod_bfs(g, static_cast<Vertex>(u), i, samples, q.table).cycle;
        });
        for (auto& c : found) {
            g_search = std::min(g_search, c.weight);
            if (c.weight < best.estimate) best.offer(c.weight, std::move(c.walk));
        }
    }
    if (trace) {
        trace->scale = rg.scale;
        trace->reduced_n = n;
        trace->i = i;
        trace->g_high = high.estimate;
        trace->g_med = g_med;
        trace->g_search = g_search;
        trace->landmarks = q.table.size();
    }

    if (high.guarantee == Guarantee::Exact) {
        res.guarantee = Guarantee::Exact;
        res.factor = 1.0;
    }
    if (best.finite()) {
        LiftedCycle lifted = lift_cycle(rg, input, best.witness);
        res.estimate = lifted.weight;
        res.witness = std::move(lifted.walk);
    }
    return res;
}

}  // namespace detail

// 2-approximate girth of an unweighted graph.
inline GirthResult girth_approx_unweighted(const DirectedGraph& g, std::uint64_t seed,
                                           const UnweightedOptions& opt = {}, UnweightedTrace* trace = nullptr) {
    if (!g.unit_weights()) throw Error(Errc::InvalidParameters, "girth_approx_unweighted needs unit weights");
    auto run = [&](const DirectedGraph& sub, std::uint64_t s) { return detail::unweighted_core(sub, s, opt, trace); };
    GirthResult r = opt.per_component ? per_component(g, seed, run) : run(g, seed);
    r.algorithm = "approx2";
    r.seed = seed;
    return r;
}

}  // namespace girthkit

#endif  // GIRTHKIT_GIRTH_UNWEIGHTED_HPP
