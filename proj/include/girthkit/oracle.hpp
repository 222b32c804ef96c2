#ifndef GIRTHKIT_ORACLE_HPP
#define GIRTHKIT_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "girthkit/graph.hpp"
#include "girthkit/result.hpp"

// Brute-force ground truth. Deliberately written against the raw adjacency
// with array-scan Dijkstra and plain BFS so that it shares no search code with
// the approximation algorithms.
namespace girthkit::oracle {

inline constexpr std::size_t kDefaultRoundtripCap = 2000;

namespace detail {

struct SourceRun {
    std::vector<Weight> dist;
    std::vector<Vertex> pred;
};

inline SourceRun bfs(const DirectedGraph& g, Vertex s, bool reversed) {
    SourceRun r{std::vector<Weight>(g.n(), kInfinity), std::vector<Vertex>(g.n(), kNoVertex)};
    std::vector<Vertex> frontier{s}, next;
    r.dist[s] = 0;
    Weight level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (Vertex v : frontier) {
            for (const Arc& a : reversed ? g.in(v) : g.out(v)) {
                if (r.dist[a.other] != kInfinity) continue;
                r.dist[a.other] = level;
                r.pred[a.other] = v;
                next.push_back(a.other);
            }
        }
        frontier.swap(next);
    }
    return r;
}

inline SourceRun scan_dijkstra(const DirectedGraph& g, Vertex s, bool reversed) {
    const std::size_t n = g.n();
    SourceRun r{std::vector<Weight>(n, kInfinity), std::vector<Vertex>(n, kNoVertex)};
    std::vector<bool> settled(n, false);
    r.dist[s] = 0;
    for (std::size_t round = 0; round < n; ++round) {
        Vertex best = kNoVertex;
        for (Vertex v = 0; v < n; ++v)
            if (!settled[v] && r.dist[v] != kInfinity && (best == kNoVertex || r.dist[v] < r.dist[best]))
                best = v;
        if (best == kNoVertex) break;
        settled[best] = true;
        for (const Arc& a : reversed ? g.in(best) : g.out(best)) {
            if (r.dist[best] + a.weight < r.dist[a.other]) {
                r.dist[a.other] = r.dist[best] + a.weight;
                r.pred[a.other] = best;
            }
        }
    }
    return r;
}

inline SourceRun search(const DirectedGraph& g, Vertex s, bool reversed) {
    bool unit = true;
    for (const Edge& e : g.edges()) unit = unit && e.weight == 1;
    return unit ? bfs(g, s, reversed) : scan_dijkstra(g, s, reversed);
}

}  // namespace detail

// Minimum-weight directed cycle with a witness; estimate is kInfinity for an
// acyclic graph.
inline GirthResult exact_girth(const DirectedGraph& g) {
    GirthResult best;
    best.algorithm = "exact";
    best.guarantee = Guarantee::Exact;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (g.in_degree(s) == 0 || g.out_degree(s) == 0) continue;
        detail::SourceRun run = detail::search(g, s, false);
        for (const Arc& a : g.in(s)) {
            if (run.dist[a.other] == kInfinity) continue;
            Weight w = run.dist[a.other] + a.weight;
            if (w >= best.estimate) continue;
            std::vector<Vertex> walk;
            for (Vertex cur = a.other; cur != s; cur = run.pred[cur]) walk.push_back(cur);
            walk.push_back(s);
            std::reverse(walk.begin(), walk.end());
            best.offer(w, std::move(walk));
        }
    }
    return best;
}

// Pairwise one-way distances; rt(u,v) = d(u,v) + d(v,u).
class RoundtripMatrix {
public:
    RoundtripMatrix() = default;
    explicit RoundtripMatrix(std::size_t n) : n_(n), d_(n * n, kInfinity) {}

    std::size_t n() const noexcept { return n_; }
    Weight d(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    Weight rt(Vertex u, Vertex v) const { return saturating_add(d(u, v), d(v, u)); }
    void set(Vertex u, Vertex v, Weight w) { d_[static_cast<std::size_t>(u) * n_ + v] = w; }

private:
    std::size_t n_ = 0;
    std::vector<Weight> d_;
};

inline RoundtripMatrix exact_roundtrip(const DirectedGraph& g,
                                       std::size_t cap = kDefaultRoundtripCap) {
    if (g.n() > cap)
        throw Error(Errc::CapExceeded, "exact_roundtrip: n=" + std::to_string(g.n()) +
                                           " exceeds cap " + std::to_string(cap));
    RoundtripMatrix rm(g.n());
    for (Vertex s = 0; s < g.n(); ++s) {
        detail::SourceRun run = detail::search(g, s, false);
        for (Vertex v = 0; v < g.n(); ++v) rm.set(s, v, run.dist[v]);
    }
    return rm;
}

struct SpannerCheck {
    bool ok = true;
    Vertex u = kNoVertex;
    Vertex v = kNoVertex;
    Weight rt_h = 0;
    Weight rt_g = 0;
    double worst_ratio = 1.0;
};

namespace detail {

inline SpannerCheck compare(const DirectedGraph& g, const DirectedGraph& h, double stretch,
                            std::size_t cap) {
    RoundtripMatrix rg = exact_roundtrip(g, cap);
    RoundtripMatrix rh = exact_roundtrip(h, cap);
    SpannerCheck out;
    for (Vertex u = 0; u < g.n(); ++u) {
        for (Vertex v = u + 1; v < g.n(); ++v) {
            Weight a = rg.rt(u, v);
            if (!is_finite(a)) continue;
            Weight b = rh.rt(u, v);
            double ratio = is_finite(b) ? static_cast<double>(b) / static_cast<double>(a)
                                        : std::numeric_limits<double>::infinity();
            out.worst_ratio = std::max(out.worst_ratio, ratio);
            if (out.ok && !(static_cast<double>(b) <= stretch * static_cast<double>(a))) {
                out.ok = false;
                out.u = u;
                out.v = v;
                out.rt_h = b;
                out.rt_g = a;
            }
        }
    }
    return out;
}

}  // namespace detail

// ok iff rt_H(u,v) <= stretch * rt_G(u,v) for every pair with finite rt_G.
inline SpannerCheck verify_spanner(const DirectedGraph& g, const SpannerSubgraph& h,
                                   double stretch, std::size_t cap = kDefaultRoundtripCap) {
    std::vector<Edge> edges;
    for (EdgeId e : h.edges) {
        if (e >= g.m()) throw Error(Errc::NotASubgraph, "edge id " + std::to_string(e));
        edges.push_back(g.edge(e));
    }
    std::vector<bool> aux;
    for (EdgeId e : h.edges) aux.push_back(g.auxiliary(e));
    DirectedGraph sub = DirectedGraph::from_edges(g.n(), std::move(edges), std::move(aux), g.weighted());
    return detail::compare(g, sub, stretch, cap);
}

// Same check for a spanner read back from a graph file.
inline SpannerCheck verify_spanner(const DirectedGraph& g, const DirectedGraph& h, double stretch,
                                   std::size_t cap = kDefaultRoundtripCap) {
    if (h.n() != g.n()) throw Error(Errc::NotASubgraph, "vertex counts differ");
    for (const Edge& e : h.edges()) {
        auto id = g.find_edge(e.tail, e.head);
        if (!id || g.edge(*id).weight != e.weight)
            throw Error(Errc::NotASubgraph, "edge (" + std::to_string(e.tail) + "," +
                                                std::to_string(e.head) + ") not in host graph");
    }
    return detail::compare(g, h, stretch, cap);
}

}  // namespace girthkit::oracle

#endif  // GIRTHKIT_ORACLE_HPP
