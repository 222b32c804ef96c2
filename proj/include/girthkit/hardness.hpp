#ifndef GIRTHKIT_HARDNESS_HPP
#define GIRTHKIT_HARDNESS_HPP

#include <vector>

#include "girthkit/generate.hpp"
#include "girthkit/graph.hpp"
#include "girthkit/rng.hpp"
#include "girthkit/shortest_paths.hpp"

namespace girthkit {

// Random k-coloring; keeps only edges from color c to color c+1 mod k, so
// every cycle length is a multiple of k.
inline DirectedGraph layer_by_colors(const DirectedGraph& g, int k, std::uint64_t seed,
                                     std::vector<int>* colors_out = nullptr,
                                     const std::vector<int>& fixed = {}) {
    if (k < 3) throw Error(Errc::InvalidK, "color layering needs k >= 3");
    Rng rng(derive_seed(seed, Stream::Coloring));
    std::vector<int> color(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
        int drawn = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
        color[v] = v < fixed.size() && fixed[v] >= 0 ? fixed[v] : drawn;
    }
    std::vector<EdgeId> keep;
    for (EdgeId e = 0; e < g.m(); ++e) {
        const Edge& ed = g.edge(e);
        if (color[ed.head] == (color[ed.tail] + 1) % k) keep.push_back(e);
    }
    if (colors_out) *colors_out = color;
    return edge_subgraph(g, keep);
}

// Girth-gap instance on n vertices: with `plant`, k extra pre-colored vertices
// carry an aligned k-cycle (girth exactly k); without it, aligned k-cycles of
// the layered host are broken edge by edge so the girth is >= 2k.
inline DirectedGraph gap_instance(std::size_t n, int k, bool plant, std::uint64_t seed) {
    if (k < 3 || n < static_cast<std::size_t>(k))
        throw Error(Errc::InvalidParameters, "gap_instance needs n >= k >= 3");
    const std::size_t host_n = n;
    const std::size_t m = std::min<std::size_t>(host_n * (host_n - 1), 4 * host_n);
    DirectedGraph host = directed_gnm(host_n, m, WeightModel::unit(), derive_seed(seed, Stream::Generator, {1}));

    std::vector<int> fixed(host_n, -1);
    std::vector<Edge> edges(host.edges().begin(), host.edges().end());
    if (plant) {
        // the first k vertices become the planted cycle, isolated from the rest
        std::vector<Edge> rest;
        for (const Edge& e : edges)
            if (e.tail >= static_cast<Vertex>(k) && e.head >= static_cast<Vertex>(k)) rest.push_back(e);
        edges = std::move(rest);
        for (int c = 0; c < k; ++c) {
            fixed[c] = c;
            edges.push_back({static_cast<Vertex>(c), static_cast<Vertex>((c + 1) % k), 1});
        }
    }
    DirectedGraph layered = layer_by_colors(build_graph(host_n, std::move(edges)), k, seed, nullptr, fixed);
    if (plant) return layered;

    for (;;) {
        CycleFound c = smallest_cycle(layered);
        if (c.weight != k) return layered;
        std::vector<EdgeId> keep;
        EdgeId drop = *layered.find_edge(c.walk[0], c.walk[1]);
        for (EdgeId e = 0; e < layered.m(); ++e)
            if (e != drop) keep.push_back(e);
        layered = edge_subgraph(layered, keep);
    }
}

}  // namespace girthkit

#endif  // GIRTHKIT_HARDNESS_HPP
