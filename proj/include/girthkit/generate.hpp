#ifndef GIRTHKIT_GENERATE_HPP
#define GIRTHKIT_GENERATE_HPP

#include <set>
#include <string>
#include <vector>

#include "girthkit/graph.hpp"
#include "girthkit/rng.hpp"

namespace girthkit {

// unit when max_weight == 1, otherwise uniform over {1..max_weight}.
struct WeightModel {
    Weight max_weight = 1;

    static WeightModel unit() { return {1}; }
    static WeightModel uniform(Weight max) { return {max}; }
    bool is_unit() const { return max_weight == 1; }
};

namespace detail {

inline DirectedGraph finish(std::size_t n, std::vector<Edge> edges, WeightModel w, Rng& rng) {
    if (w.max_weight < 1) throw Error(Errc::InvalidParameters, "max weight must be >= 1");
    for (Edge& e : edges) e.weight = w.is_unit() ? 1 : rng.between(1, w.max_weight);
    return build_graph(n, std::move(edges), !w.is_unit());
}

}  // namespace detail

// m distinct ordered pairs drawn uniformly, no self-loops.
inline DirectedGraph directed_gnm(std::size_t n, std::size_t m, WeightModel w = {},
                                  std::uint64_t seed = 0) {
    if (n < 1 || m > n * (n - 1))
        throw Error(Errc::InvalidParameters, "gnm requires m <= n(n-1)");
    Rng rng(derive_seed(seed, Stream::Generator, {0}));
    std::vector<Edge> edges;
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1);
    auto decode = [n](std::uint64_t code) {
        Vertex t = static_cast<Vertex>(code / (n - 1));
        Vertex h = static_cast<Vertex>(code % (n - 1));
        if (h >= t) ++h;
        return Edge{t, h, 1};
    };
    if (2 * m > pairs) {
        for (auto idx : rng.sample_indices(pairs, m)) edges.push_back(decode(idx));
    } else {
        std::set<std::uint64_t> chosen;
        while (chosen.size() < m) {
            std::uint64_t code = rng.below(pairs);
            if (chosen.insert(code).second) edges.push_back(decode(code));
        }
    }
    return detail::finish(n, std::move(edges), w, rng);
}

inline DirectedGraph directed_cycle(std::size_t n, WeightModel w = {}, std::uint64_t seed = 0) {
    if (n < 2) throw Error(Errc::InvalidParameters, "cycle needs n >= 2");
    Rng rng(derive_seed(seed, Stream::Generator, {1}));
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < n; ++v)
        edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n), 1});
    return detail::finish(n, std::move(edges), w, rng);
}

// Vertex v sits in layer v mod k. The Hamiltonian cycle 0->1->...->n-1->0
// plus one random chord per vertex into the next layer, so every cycle
// length is a multiple of k. Requires k >= 2 and k | n.
inline DirectedGraph layered_cycle(std::size_t n, std::size_t k, WeightModel w = {},
                                   std::uint64_t seed = 0) {
    if (k < 2 || n < k || n % k != 0)
        throw Error(Errc::InvalidParameters, "layered_cycle requires k >= 2 and k | n");
    Rng rng(derive_seed(seed, Stream::Generator, {2}));
    std::set<std::pair<Vertex, Vertex>> seen;
    std::vector<Edge> edges;
    auto add = [&](Vertex a, Vertex b) {
        if (a != b && seen.insert({a, b}).second) edges.push_back({a, b, 1});
    };
    for (std::size_t v = 0; v < n; ++v) add(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n));
    const std::size_t per_layer = n / k;
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t layer = (v + 1) % k;
        Vertex target = static_cast<Vertex>(layer + k * rng.below(per_layer));
        add(static_cast<Vertex>(v), target);
    }
    return detail::finish(n, std::move(edges), w, rng);
}

// r x c grid with both directions of every grid edge.
inline DirectedGraph bidirected_grid(std::size_t rows, std::size_t cols, WeightModel w = {},
                                     std::uint64_t seed = 0) {
    if (rows < 1 || cols < 1 || rows * cols < 2)
        throw Error(Errc::InvalidParameters, "grid needs at least two cells");
    Rng rng(derive_seed(seed, Stream::Generator, {3}));
    std::vector<Edge> edges;
    auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) {
                edges.push_back({id(r, c), id(r, c + 1), 1});
                edges.push_back({id(r, c + 1), id(r, c), 1});
            }
            if (r + 1 < rows) {
                edges.push_back({id(r, c), id(r + 1, c), 1});
                edges.push_back({id(r + 1, c), id(r, c), 1});
            }
        }
    }
    return detail::finish(rows * cols, std::move(edges), w, rng);
}

}  // namespace girthkit

#endif  // GIRTHKIT_GENERATE_HPP
