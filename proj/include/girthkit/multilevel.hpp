#ifndef GIRTHKIT_MULTILEVEL_HPP
#define GIRTHKIT_MULTILEVEL_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "girthkit/girth_weighted.hpp"
#include "girthkit/graph.hpp"
#include "girthkit/result.hpp"
#include "girthkit/sampling.hpp"
#include "girthkit/shortest_paths.hpp"

namespace girthkit {

struct AlphaExponent {
    int k = 1;
    double alpha = 0.5;
    double residual = 0.0;  // |alpha (1+alpha)^(k-1) - (1-alpha)|
};

// Unique root in (0,1) of alpha (1+alpha)^(k-1) = 1 - alpha, by bisection on
// the increasing f(a) = a (1+a)^(k-1) + a - 1.
inline AlphaExponent solve_alpha(int k) {
    if (k < 1) throw Error(Errc::InvalidK, "k must be >= 1");
    auto f = [k](double a) { return a * std::pow(1.0 + a, k - 1) + a - 1.0; };
    double lo = 0.0, hi = 1.0, mid = 0.5;
    for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (lo + hi);
        double v = f(mid);
        if (v == 0.0 || mid == lo || mid == hi) break;
        (v < 0 ? lo : hi) = mid;
    }
    return {k, mid, std::abs(mid * std::pow(1.0 + mid, k - 1) - (1.0 - mid))};
}

inline double multilevel_beta(int k, double eps) { return k + k * k * eps + k * eps; }

// Least l in 1..k-1 (1-based into `sizes` = |S^1|..|S^k|) with
// |S^{l+1}| <= c (|S^l| n^alpha)^(1/(1+alpha)).
inline int lemma_alphaformula_split(const std::vector<std::size_t>& sizes, double alpha, double c, std::size_t n) {
    const double na = std::pow(static_cast<double>(n), alpha);
    for (std::size_t l = 1; l < sizes.size(); ++l) {
        double bound = c * std::pow(static_cast<double>(sizes[l - 1]) * na, 1.0 / (1.0 + alpha));
        if (static_cast<double>(sizes[l]) <= bound) return static_cast<int>(l);
    }
    throw Error(Errc::NoSplitFound, "no level satisfies the split inequality");
}

// Everything a level search needs besides the graph orientation.
struct LevelContext {
    double eps = 0.25;
    int k = 2;
    double g_prime = 1.0;  // current girth estimate (1+eps)^(i+1)
    const SampleSets* samples = nullptr;
    const LandmarkTable* lt = nullptr;
    const std::vector<bool>* on = nullptr;
};

struct LevelSearch {
    std::vector<Vertex> visited;  // sorted S^l(u)
    CycleFound cycle;             // best closing edge back into u
    SearchStats stats;
};

namespace detail {

// (r, bonus): the per-landmark slack (1+eps)^(j'+1) of the tightest level j'
// whose sample contains r; the zero-distance level contributes 0.
inline std::vector<std::pair<std::uint32_t, double>> level_filter(const SampleSets& s, Vertex u,
                                                                  const DistanceScale& scale) {
    std::vector<std::pair<std::uint32_t, double>> f;
    for (std::size_t slot = 0; slot < s.slots; ++slot) {
        const double bonus = slot == 0 ? 0.0 : scale.power(static_cast<int>(slot));
        for (std::uint32_t r : s.R(u, slot)) f.push_back({r, bonus});
    }
    std::sort(f.begin(), f.end());
    std::vector<std::pair<std::uint32_t, double>> out;
    for (auto& [r, b] : f)
        if (out.empty() || out.back().first != r) out.push_back({r, b});
    return out;
}

}  // namespace detail

// l-th pruned search from u over on vertices: an extracted x at level j passes
// if d(x,r) <= (l + l^2 eps) g' - (1+eps)^j + (1+eps)^(j'+1) for every r in
// every R^{j'}(u); the search stops once the heap minimum exceeds (2l-1) g'/2.
inline LevelSearch level_dijkstra(const DirectedGraph& g, Vertex u, int l, const LevelContext& ctx) {
    DistanceScale scale(ctx.eps);
    const double allowance = (l + l * l * ctx.eps) * ctx.g_prime;
    const double stop = (2.0 * l - 1.0) * ctx.g_prime / 2.0;
    auto filter = detail::level_filter(*ctx.samples, u, scale);
    auto on = [&](Vertex v) { return ctx.on == nullptr || (*ctx.on)[v]; };

    LevelSearch out;
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
        if (static_cast<double>(d) > stop) break;
        extracted[x] = true;
        ++out.stats.extracted;
        const int j = scale.level(d);
        const double pj = j < 0 ? 0.0 : scale.power(j);
        bool pass = true;
        for (auto& [r, bonus] : filter)
            if (!(static_cast<double>(ctx.lt->to(r, x)) <= allowance - pj + bonus)) {
                pass = false;
                break;
            }
        if (!pass) {
            ++out.stats.filtered;
            continue;
        }
        ++out.stats.expanded;
        out.visited.push_back(x);
        for (const Arc& a : g.out(x)) {
            if (!on(a.other)) continue;
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
    if (closing != kNoVertex) out.cycle.walk = walk_from_parents(g, parent, u, closing);
    std::sort(out.visited.begin(), out.visited.end());
    return out;
}

struct MultilevelOptions {
    SamplingConstants constants = SamplingConstants::defaults();
    double split_constant = 2.0;
    std::size_t base_size = 64;  // exact search at or below this many vertices
    unsigned threads = 0;
};

enum class LevelAction { SmallBalls, Recurse, ExactStrict, NoSplitFallback };

struct LevelTraceRow {
    int depth = 0;
    Vertex u = 0;
    bool in_side = false;
    std::vector<std::size_t> sizes;  // |S^1|, |S^2|, ...
    int split = 0;                   // chosen l (0 when none)
    LevelAction action = LevelAction::SmallBalls;
    std::size_t marked_off = 0;
};

// One outer iteration's retirement, seen from the graph at that depth.
struct MarkOffEvent {
    int depth = 0;
    const DirectedGraph* graph = nullptr;
    const std::vector<bool>* on_before = nullptr;
    std::vector<Vertex> retired;
    double g_prime = 0;
    Weight best = kInfinity;  // best estimate at this depth after the iteration
};

struct MultilevelTrace {
    AlphaExponent alpha;
    double beta = 0;
    std::vector<LevelTraceRow> rows;
    std::size_t recursions = 0;
    std::function<void(const MarkOffEvent&)> on_mark_off;  // optional
};

inline std::string level_action_name(LevelAction a) {
    switch (a) {
        case LevelAction::SmallBalls: return "small_balls";
        case LevelAction::Recurse: return "recurse";
        case LevelAction::ExactStrict: return "exact_not_smaller";
        case LevelAction::NoSplitFallback: return "no_split_fallback";
    }
    return "?";
}

namespace detail {

inline std::vector<Vertex> reversed_walk(std::vector<Vertex> w) {
    std::reverse(w.begin(), w.end());
    return w;
}

inline bool nested(const std::vector<Vertex>& inner, const std::vector<Vertex>& outer) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

class Multilevel {
public:
    Multilevel(int k, double eps, const MultilevelOptions& opt, MultilevelTrace* trace)
        : k_(k), eps_(eps), opt_(opt), trace_(trace), alpha_(solve_alpha(k)), beta_(multilevel_beta(k, eps)) {
        if (trace_) {
            trace_->alpha = alpha_;
            trace_->beta = beta_;
        }
    }

    GirthResult run(const DirectedGraph& g, std::uint64_t seed, int depth) {
        GirthResult best;
        const std::size_t n = g.n();
        if (n <= opt_.base_size) {
            CycleFound c = smallest_cycle(g);
            if (c.weight < kInfinity) best.offer(c.weight, std::move(c.walk));
            return best;
        }
        const unsigned threads = resolve_threads(opt_.threads);
        const double alpha = alpha_.alpha;
        const double na = std::pow(double(n), alpha);
        DistanceScale scale(eps_);

        const std::size_t qsize = capped_count(opt_.constants.landmark_factor * na * log_n(n), n);
        LandmarkSample q = sample_Q(g, qsize, seed, threads);
        LandmarkProbe probe = probe_landmarks(g, q.table, q.q);
        best = probe.best_roundtrip;

        // minimal i with a landmark pair inside beta (1+eps)^(i+1)
        int i_min;
        if (is_finite(probe.min_radius)) {
            const double ratio = static_cast<double>(probe.min_radius) / beta_;
            i_min = static_cast<int>(std::ceil(std::log(ratio) / std::log(1.0 + eps_))) - 1;
            while (scale.power(i_min + 1) * beta_ < static_cast<double>(probe.min_radius)) ++i_min;
            while (scale.power(i_min) * beta_ >= static_cast<double>(probe.min_radius)) --i_min;
        } else {
            i_min = scale.ceil_log(static_cast<double>(g.max_weight()) * double(n)) + 1;
        }
        const int i = i_min - 1;
        const double g_prime = scale.power(i + 1);
        if (i < 0 || g_prime < 1.0) return best;  // nothing of weight <= g' can exist

        GeneralSampleParams p;
        p.i = i;
        p.epsilon = eps_;
        p.beta = beta_;
        p.alpha = alpha;
        p.max_level = std::max(0, scale.level(static_cast<Weight>(std::ceil((2.0 * k_ - 1.0) * g_prime / 2.0))));
        LandmarkTable lt_in = q.table.reversed_view();
        DirectedGraph gr = reverse(g);
        SampleSets s_out = build_samples_general(g, p, q.table, derive_seed(seed, Stream::SampleSet, {0}),
                                                 opt_.constants, threads);
        SampleSets s_in = build_samples_general(gr, p, lt_in, derive_seed(seed, Stream::SampleSet, {1}),
                                                opt_.constants, threads);

        std::vector<bool> on(n, true);
        LevelContext out_ctx{eps_, k_, g_prime, &s_out, &q.table, &on};
        LevelContext in_ctx{eps_, k_, g_prime, &s_in, &lt_in, &on};
        auto offer = [&](CycleFound c, bool reversed) {
            if (c.weight < best.estimate) best.offer(c.weight, reversed ? reversed_walk(std::move(c.walk)) : std::move(c.walk));
        };
        auto exact_on = [&](const std::vector<Vertex>& vs) {
            InducedSubgraph sub = induced_subgraph(g, vs);
            CycleFound c = smallest_cycle(sub.graph);
            if (c.weight < best.estimate) {
                std::vector<Vertex> w;
                for (Vertex v : c.walk) w.push_back(sub.to_parent[v]);
                best.offer(c.weight, std::move(w));
            }
        };

        const bool hooked = trace_ && trace_->on_mark_off;
        std::vector<bool> snapshot;
        auto notify = [&](const std::vector<bool>& before) {
            MarkOffEvent ev{depth, &g, &before, {}, g_prime, best.estimate};
            for (Vertex v = 0; v < n; ++v)
                if (before[v] && !on[v]) ev.retired.push_back(v);
            trace_->on_mark_off(ev);
        };

        for (Vertex u = 0; u < n; ++u) {
            if (!on[u]) continue;
            if (hooked) snapshot = on;
            const std::size_t off_before = std::count(on.begin(), on.end(), false);
            LevelTraceRow row;
            row.depth = depth;
            row.u = u;

            LevelSearch s1 = level_dijkstra(g, u, 1, out_ctx);
            offer(s1.cycle, false);
            std::vector<std::vector<Vertex>> sets{{u}, s1.visited};
            bool in_side = false;
            const DirectedGraph* side = &g;
            const LevelContext* ctx = &out_ctx;
            if (static_cast<double>(s1.visited.size()) <= na) {
                LevelSearch t1 = level_dijkstra(gr, u, 1, in_ctx);
                offer(t1.cycle, true);
                if (static_cast<double>(t1.visited.size()) <= na) {
                    std::vector<Vertex> both;
                    std::set_union(s1.visited.begin(), s1.visited.end(), t1.visited.begin(), t1.visited.end(),
                                   std::back_inserter(both));
                    if (!std::binary_search(both.begin(), both.end(), u)) both.insert(std::lower_bound(both.begin(), both.end(), u), u);
                    CycleFound c = shortest_cycle_through(g, u, mask(both, n));
                    offer(std::move(c), false);
                    on[u] = false;
                    row.sizes = {s1.visited.size(), t1.visited.size()};
                    row.marked_off = 1;
                    record(std::move(row));
                    if (hooked) notify(snapshot);
                    continue;
                }
                in_side = true;
                side = &gr;
                ctx = &in_ctx;
                sets[1] = t1.visited;
            }
            row.in_side = in_side;

            int split = 0;
            for (int l = 2; l <= k_ && split == 0; ++l) {
                LevelSearch sl = level_dijkstra(*side, u, l, *ctx);
                offer(sl.cycle, in_side);
                if (!nested(sets.back(), sl.visited)) throw std::logic_error("level sets are not nested");
                sets.push_back(std::move(sl.visited));
                std::vector<std::size_t> sizes;
                for (std::size_t a = 1; a < sets.size(); ++a) sizes.push_back(sets[a].size());
                try {
                    split = lemma_alphaformula_split(sizes, alpha, opt_.split_constant, n);
                } catch (const Error&) {
                    split = 0;
                }
            }
            for (std::size_t a = 1; a < sets.size(); ++a) row.sizes.push_back(sets[a].size());

            std::vector<Vertex> target, retire;
            if (split > 0) {
                target = sets[split + 1];
                retire = sets[split];
                row.split = split;
                row.action = LevelAction::Recurse;
            } else {
                // split inequality never held: exact search on the widest set
                target = sets.back();
                retire = sets.size() >= 2 ? sets[sets.size() - 2] : sets.back();
                row.action = LevelAction::NoSplitFallback;
            }
            if (!std::binary_search(target.begin(), target.end(), u)) {
                target.insert(std::lower_bound(target.begin(), target.end(), u), u);
            }
            if (row.action == LevelAction::Recurse && target.size() >= n) row.action = LevelAction::ExactStrict;

            if (row.action == LevelAction::Recurse) {
                InducedSubgraph sub = induced_subgraph(g, target);
                if (trace_) ++trace_->recursions;
                GirthResult r = run(sub.graph, derive_seed(seed, Stream::Recursion, {u, std::uint64_t(depth)}), depth + 1);
                if (r.finite() && r.estimate < best.estimate) {
                    std::vector<Vertex> w;
                    for (Vertex v : r.witness) w.push_back(sub.to_parent[v]);
                    best.offer(r.estimate, std::move(w));
                }
            } else {
                exact_on(target);
            }
            for (Vertex v : retire) on[v] = false;
            on[u] = false;
            row.marked_off = static_cast<std::size_t>(std::count(on.begin(), on.end(), false)) - off_before;
            if (row.marked_off == 0) throw std::logic_error("outer iteration marked nothing off");
            record(std::move(row));
            if (hooked) notify(snapshot);
        }
        return best;
    }

private:
    static std::vector<bool> mask(const std::vector<Vertex>& vs, std::size_t n) {
        std::vector<bool> m(n, false);
        for (Vertex v : vs) m[v] = true;
        return m;
    }
    void record(LevelTraceRow row) {
        if (trace_) trace_->rows.push_back(std::move(row));
    }

    int k_;
    double eps_;
    MultilevelOptions opt_;
    MultilevelTrace* trace_;
    AlphaExponent alpha_;
    double beta_;
};

}  // namespace detail

// (2k+eps)-approximate girth; k = 1 is the (2+eps) algorithm.
inline GirthResult girth_approx_2k(const DirectedGraph& g, int k, double eps, std::uint64_t seed,
                                   const MultilevelOptions& opt = {}, MultilevelTrace* trace = nullptr) {
    if (k < 1) throw Error(Errc::InvalidParameters, "k must be >= 1");
    if (!(eps > 0) || !std::isfinite(eps)) throw Error(Errc::InvalidParameters, "epsilon must be positive");
    GirthResult r;
    if (k == 1) {
        WeightedOptions w;
        w.constants = opt.constants;
        w.threads = opt.threads;
        r = girth_approx_weighted(g, eps, seed, w);
        if (trace) {
            trace->alpha = solve_alpha(1);
            trace->beta = multilevel_beta(1, eps);
        }
    } else {
        detail::Multilevel ml(k, eps, opt, trace);
        r = ml.run(g, seed, 0);
    }
    r.algorithm = "approx2k";
    r.seed = seed;
    r.guarantee = Guarantee::Factor;
    const double beta = multilevel_beta(k, eps);
    r.factor = k == 1 ? 2.0 + eps : 2.0 * beta * (1.0 + eps) * (1.0 + eps);
    return r;
}

struct StrongPolyResult {
    GirthResult result;  // estimate re-priced in the input graph
    ScaledInstance instance;
    Weight scaled_estimate = kInfinity;
};

// Runs the k-family algorithm on the rescaled instance and re-prices the
// witness with the original weights.
inline StrongPolyResult girth_approx_strong(const DirectedGraph& g, double eps, int k, std::uint64_t seed,
                                            const MultilevelOptions& opt = {}) {
    StrongPolyResult out;
    out.instance = rescale_for_strong_polytime(g, eps, k);
    GirthResult h = girth_approx_2k(out.instance.graph, k, eps, seed, opt);
    out.scaled_estimate = h.estimate;
    out.result = h;
    out.result.algorithm = "strong_poly";
    out.result.factor = 2.0 * k + 2.0 * eps;
    if (h.finite()) out.result.estimate = walk_weight(g, h.witness);
    return out;
}

}  // namespace girthkit

#endif  // GIRTHKIT_MULTILEVEL_HPP
