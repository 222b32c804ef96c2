#ifndef GIRTHKIT_GIRTH_WEIGHTED_HPP
#define GIRTHKIT_GIRTH_WEIGHTED_HPP

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

#include "girthkit/driver.hpp"
#include "girthkit/graph.hpp"
#include "girthkit/result.hpp"
#include "girthkit/sampling.hpp"
#include "girthkit/shortest_paths.hpp"
#include "girthkit/transform.hpp"

namespace girthkit {

struct SearchStats {
    std::size_t extracted = 0;
    std::size_t expanded = 0;
    std::size_t filtered = 0;  // extracted but failed the sample filter
    int levels = 0;            // highest level slot touched
};

struct ModDijkstraResult {
    CycleFound cycle;
    std::vector<EdgeId> tree;  // parent edges of every reached vertex (when collected)
    SearchStats stats;
};

inline void check_epsilon(double eps) {
    if (!(eps > 0) || !std::isfinite(eps)) throw Error(Errc::InvalidEpsilon, "epsilon must be positive");
}

// Priority-queue search from u that expands an extracted x at level j (by d[x])
// only if d(x,s) <= (1+eps)^(i+2) for all s in R^j(u). Levels above i reuse
// R^i(u); nothing beyond distance (1+eps)^(i+1) is expanded. `allowed`
// restricts the search to a vertex subset containing u.
inline ModDijkstraResult mod_dijkstra(const DirectedGraph& g, Vertex u, int i, double eps,
                                      const SampleSets& samples, const LandmarkTable& lt,
                                      const std::vector<bool>& allowed = {}, bool collect_tree = false) {
    check_epsilon(eps);
    DistanceScale scale(eps);
    const double horizon = scale.power(i + 1);
    const double radius = scale.power(i + 2);
    auto ok = [&](Vertex v) { return allowed.empty() || allowed[v]; };

    ModDijkstraResult out;
    std::vector<Weight> dist(g.n(), kInfinity);
    std::vector<EdgeId> parent(g.n(), kNoEdge);
    std::vector<bool> extracted(g.n(), false);
    using Item = std::pair<Weight, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[u] = 0;
    heap.push({0, u});
    Vertex closing = kNoVertex;

    while (!heap.empty()) {
        auto [d, x] = heap.top();
        heap.pop();
        if (extracted[x]) continue;
        extracted[x] = true;
        ++out.stats.extracted;
        if (static_cast<double>(d) > horizon) continue;
        const int slot = std::min(scale.level(d), i) + 1;
        out.stats.levels = std::max(out.stats.levels, slot);
        bool pass = true;
        for (std::uint32_t s : samples.R(u, static_cast<std::size_t>(slot)))
            if (!(static_cast<double>(lt.to(s, x)) <= radius)) {
                pass = false;
                break;
            }
        if (!pass) {
            ++out.stats.filtered;
            continue;
        }
        ++out.stats.expanded;
        for (const Arc& a : g.out(x)) {
            if (!ok(a.other)) continue;
            const Weight nd = d + a.weight;
            if (a.other == u) {
                if (nd < out.cycle.weight) {
                    out.cycle.weight = nd;
                    closing = x;
                }
                continue;
            }
            if (!extracted[a.other] && nd < dist[a.other]) {
                dist[a.other] = nd;
                parent[a.other] = a.id;
                heap.push({nd, a.other});
            }
        }
    }
    // parents of extracted vertices are final, so the closing path is intact
    if (closing != kNoVertex) out.cycle.walk = walk_from_parents(g, parent, u, closing);
    if (collect_tree)
        for (Vertex v = 0; v < g.n(); ++v)
            if (parent[v] != kNoEdge) out.tree.push_back(parent[v]);
    return out;
}

struct WeightedOptions {
    SamplingConstants constants = SamplingConstants::defaults();
    bool reduce = true;        // degree reduction first
    bool per_component = true; // split into strongly connected components
    unsigned threads = 0;
};

struct WeightedTrace {
    int i = 0;
    Weight min_radius = kInfinity;
    std::size_t landmarks = 0;
    std::size_t searches = 0;
};

namespace detail {

inline GirthResult weighted_core(const DirectedGraph& input, double eps, std::uint64_t seed,
                                 const WeightedOptions& opt, WeightedTrace* trace) {
    const unsigned threads = resolve_threads(opt.threads);
    ReducedGraph rg = opt.reduce ? reduce_weighted(input) : identity_reduction(input);
    const DirectedGraph& g = rg.graph;
    const std::size_t n = g.n();
    DistanceScale scale(eps);

    GirthResult res;
    res.algorithm = "approx2eps";
    res.seed = seed;
    res.guarantee = Guarantee::Factor;
    res.factor = 2.0 + eps;
    if (n == 0) return res;

    const std::size_t qsize = capped_count(opt.constants.landmark_factor * std::sqrt(double(n)) * log_n(n), n);
    LandmarkSample q = sample_Q(g, qsize, seed, threads);
    LandmarkProbe probe = probe_landmarks(g, q.table, q.q);
    GirthResult best = probe.best_roundtrip;

    int i;
    if (is_finite(probe.min_radius)) {
        i = scale.level(probe.min_radius) - 1;
        if (!(static_cast<double>(best.estimate) <= 2.0 * scale.power(i + 2)))
            throw std::logic_error("landmark roundtrip exceeds the scale bound");
    } else {
        i = scale.ceil_log(static_cast<double>(g.max_weight()) * static_cast<double>(n));
    }
    if (trace) {
        trace->i = i;
        trace->min_radius = probe.min_radius;
    }

    if (i >= 0) {
        GeneralSampleParams p;
        p.i = i;
        p.epsilon = eps;
        p.beta = 1.0 + eps;
        p.alpha = 0.5;
        SampleSets samples = build_samples_general(g, p, q.table, seed, opt.constants, threads);
        std::vector<CycleFound> found(n);
        parallel_for(n, threads, [&](std::size_t u) {
            found[u] = mod_dijkstra(g, static_cast<Vertex>(u), i, eps, samples, q.table).cycle;
        });
        for (auto& c : found)
            if (c.weight < best.estimate) best.offer(c.weight, std::move(c.walk));
        if (trace) trace->searches = n;
    }
    if (trace) trace->landmarks = q.table.size();

    if (best.finite()) {
        LiftedCycle lifted = lift_cycle(rg, input, best.witness);
        res.estimate = lifted.weight;
        res.witness = std::move(lifted.walk);
    }
    return res;
}

}  // namespace detail

// (2+eps)-approximate girth of a graph with integer weights >= 1.
inline GirthResult girth_approx_weighted(const DirectedGraph& g, double eps, std::uint64_t seed,
                                         const WeightedOptions& opt = {}, WeightedTrace* trace = nullptr) {
    check_epsilon(eps);
    auto run = [&](const DirectedGraph& sub, std::uint64_t s) {
        return detail::weighted_core(sub, eps, s, opt, trace);
    };
    GirthResult r = opt.per_component ? per_component(g, seed, run) : run(g, seed);
    r.algorithm = "approx2eps";
    r.seed = seed;
    r.guarantee = Guarantee::Factor;
    r.factor = 2.0 + eps;
    return r;
}

struct SpannerOptions {
    SamplingConstants constants = SamplingConstants::defaults();
    unsigned threads = 0;
};

// Roundtrip spanner with stretch 5+12eps: landmark in/out trees plus, for
// every scale i, the pruned search trees over Z_i = V \ V'_i.
inline SpannerSubgraph build_roundtrip_spanner(const DirectedGraph& g, double eps, std::uint64_t seed,
                                               const SpannerOptions& opt = {}) {
    check_epsilon(eps);
    if (eps > 1.0) throw Error(Errc::InvalidEpsilon, "spanner epsilon must be in (0, 1]");
    const unsigned threads = resolve_threads(opt.threads);
    const std::size_t n = g.n();
    DistanceScale scale(eps);
    SpannerSubgraph h;
    h.epsilon = eps;
    h.stretch = 5.0 + 12.0 * eps;
    if (n == 0) return h;

    std::vector<bool> taken(g.m(), false);
    std::vector<Provenance> prov(g.m());
    auto take = [&](EdgeId e, Provenance p) {
        if (e == kNoEdge || taken[e]) return;
        taken[e] = true;
        prov[e] = p;
    };

    const std::size_t qsize = capped_count(opt.constants.landmark_factor * std::sqrt(double(n)) * log_n(n), n);
    LandmarkSample q = sample_Q(g, qsize, seed, threads);
    for (std::uint32_t k : q.q) {
        Provenance p{ProvenanceKind::LandmarkTree, q.table.landmark(k), 0};
        for (EdgeId e : q.table.out_tree(k).parent) take(e, p);
        for (EdgeId e : q.table.in_tree(k).parent) take(e, p);
    }

    const int imax = scale.ceil_log(static_cast<double>(g.max_weight()) * static_cast<double>(n));
    for (int i = 0; i <= imax; ++i) {
        std::vector<bool> vprime = compute_Vprime(q.table, q.q, n, scale.power(i + 2), false, true);
        std::vector<bool> z(n);
        std::size_t zcount = 0;
        for (Vertex v = 0; v < n; ++v) zcount += (z[v] = !vprime[v]);
        if (zcount == 0) continue;
        GeneralSampleParams p;
        p.i = i;
        p.epsilon = eps;
        p.beta = 1.0 + eps;
        p.alpha = 0.5;
        p.excluded = vprime;
        SampleSets samples = build_samples_general(g, p, q.table, derive_seed(seed, Stream::Scale, {std::uint64_t(i)}),
                                                   opt.constants, threads);
        std::vector<std::vector<EdgeId>> trees(n);
        parallel_for(n, threads, [&](std::size_t u) {
            if (!z[u]) return;
            trees[u] = mod_dijkstra(g, static_cast<Vertex>(u), i, eps, samples, q.table, z, true).tree;
        });
        for (Vertex u = 0; u < n; ++u)
            for (EdgeId e : trees[u]) take(e, {ProvenanceKind::SearchTree, u, i});
    }

    for (EdgeId e = 0; e < g.m(); ++e)
        if (taken[e]) {
            h.edges.push_back(e);
            h.provenance.push_back(prov[e]);
        }
    return h;
}

// User-facing stretch target 5+eps' maps to the internal eps = eps'/12.
inline SpannerSubgraph build_roundtrip_spanner_for_stretch(const DirectedGraph& g, double eps_prime,
                                                           std::uint64_t seed, const SpannerOptions& opt = {}) {
    check_epsilon(eps_prime);
    return build_roundtrip_spanner(g, eps_prime / 12.0, seed, opt);
}

// Smallest edge weight W such that the edges of weight <= W contain a cycle.
inline Weight find_W(const DirectedGraph& g) {
    std::vector<Weight> w;
    for (const Edge& e : g.edges()) w.push_back(e.weight);
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    if (w.empty() || !has_cycle(g, w.back())) throw Error(Errc::Acyclic, "graph has no cycle");
    std::size_t lo = 0, hi = w.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (has_cycle(g, w[mid])) hi = mid;
        else lo = mid + 1;
    }
    return w[lo];
}

// Rescaled instance on the same vertex set: w_H = floor(w / R) with
// R = W eps / n; edges heavier than 3knW are dropped.
struct ScaledInstance {
    Weight W = 0;
    double R = 0;
    DirectedGraph graph;
    std::vector<EdgeId> kept;       // H edge id -> G edge id
    std::vector<EdgeId> discarded;  // G edge ids
};

inline ScaledInstance rescale_for_strong_polytime(const DirectedGraph& g, double eps, int k) {
    check_epsilon(eps);
    if (k < 1) throw Error(Errc::InvalidK, "k must be >= 1");
    ScaledInstance s;
    s.W = find_W(g);
    const double n = static_cast<double>(g.n());
    s.R = static_cast<double>(s.W) * eps / n;
    const double limit = 3.0 * k * n * static_cast<double>(s.W);
    std::vector<Edge> edges;
    std::vector<bool> aux;
    for (EdgeId e = 0; e < g.m(); ++e) {
        const Edge& ge = g.edge(e);
        if (static_cast<double>(ge.weight) > limit) {
            s.discarded.push_back(e);
            continue;
        }
        // floor(w / R), tolerant of a quotient landing just below an integer
        double q = static_cast<double>(ge.weight) / s.R;
        Weight wh = static_cast<Weight>(std::floor(q + 1e-9));
        if (static_cast<double>(wh) * s.R > static_cast<double>(ge.weight) * (1.0 + 1e-9)) --wh;
        edges.push_back({ge.tail, ge.head, wh});
        aux.push_back(wh == 0);
        s.kept.push_back(e);
    }
    s.graph = DirectedGraph::from_edges(g.n(), std::move(edges), std::move(aux), true);
    return s;
}

}  // namespace girthkit

#endif  // GIRTHKIT_GIRTH_WEIGHTED_HPP
