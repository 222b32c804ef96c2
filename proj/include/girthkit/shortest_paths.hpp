#ifndef GIRTHKIT_SHORTEST_PATHS_HPP
#define GIRTHKIT_SHORTEST_PATHS_HPP

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <vector>

#include "girthkit/graph.hpp"

namespace girthkit {

enum class Direction { Out, In };

// Single-source (Out) or single-target (In) distances with the tree edge that
// last improved each vertex.
struct ShortestPathTree {
    Vertex root = kNoVertex;
    Direction direction = Direction::Out;
    std::vector<Weight> dist;
    std::vector<EdgeId> parent;
};

inline ShortestPathTree shortest_paths(const DirectedGraph& g, Vertex root,
                                       Direction dir = Direction::Out) {
    ShortestPathTree t;
    t.root = root;
    t.direction = dir;
    t.dist.assign(g.n(), kInfinity);
    t.parent.assign(g.n(), kNoEdge);
    t.dist[root] = 0;
    auto arcs = [&](Vertex v) { return dir == Direction::Out ? g.out(v) : g.in(v); };

    if (g.unit_weights()) {
        std::vector<Vertex> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            for (const Arc& a : arcs(v)) {
                if (t.dist[a.other] != kInfinity) continue;
                t.dist[a.other] = t.dist[v] + 1;
                t.parent[a.other] = a.id;
                queue.push_back(a.other);
            }
        }
        return t;
    }

    using Item = std::pair<Weight, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.push({0, root});
    std::vector<bool> done(g.n(), false);
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (done[v]) continue;
        done[v] = true;
        for (const Arc& a : arcs(v)) {
            Weight nd = d + a.weight;
            if (nd < t.dist[a.other]) {
                t.dist[a.other] = nd;
                t.parent[a.other] = a.id;
                heap.push({nd, a.other});
            }
        }
    }
    return t;
}

// Vertex sequence of the tree path between root and v, oriented along the
// edges: root..v for Out trees, v..root for In trees. Empty if unreachable.
inline std::vector<Vertex> tree_path(const DirectedGraph& g, const ShortestPathTree& t, Vertex v) {
    std::vector<Vertex> path;
    if (!is_finite(t.dist[v])) return path;
    Vertex cur = v;
    path.push_back(cur);
    while (cur != t.root) {
        const Edge& e = g.edge(t.parent[cur]);
        cur = t.direction == Direction::Out ? e.tail : e.head;
        path.push_back(cur);
    }
    if (t.direction == Direction::Out) std::reverse(path.begin(), path.end());
    return path;
}

// Closed walk root -> v -> root made of the two tree paths; the first vertex
// is the root and is not repeated at the end.
inline std::vector<Vertex> roundtrip_walk(const DirectedGraph& g, const ShortestPathTree& from,
                                          const ShortestPathTree& to, Vertex v) {
    std::vector<Vertex> walk = tree_path(g, from, v);  // root..v
    std::vector<Vertex> back = tree_path(g, to, v);    // v..root
    walk.insert(walk.end(), back.begin() + 1, back.end() - 1);
    return walk;
}

// Closed walk given parent edges of an out-search rooted at `root` and a
// closing edge (last -> root).
inline std::vector<Vertex> walk_from_parents(const DirectedGraph& g,
                                             const std::vector<EdgeId>& parent, Vertex root,
                                             Vertex last) {
    std::vector<Vertex> walk;
    Vertex cur = last;
    walk.push_back(cur);
    while (cur != root) {
        cur = g.edge(parent[cur]).tail;
        walk.push_back(cur);
    }
    std::reverse(walk.begin(), walk.end());
    return walk;
}

struct CycleFound {
    Weight weight = kInfinity;
    std::vector<Vertex> walk;
};

// Exact minimum-weight cycle through u using only vertices with allowed[v]
// (all vertices when `allowed` is empty).
inline CycleFound shortest_cycle_through(const DirectedGraph& g, Vertex u,
                                         const std::vector<bool>& allowed = {}) {
    auto ok = [&](Vertex v) { return allowed.empty() || allowed[v]; };
    std::vector<Weight> dist(g.n(), kInfinity);
    std::vector<EdgeId> parent(g.n(), kNoEdge);
    std::vector<bool> done(g.n(), false);
    using Item = std::pair<Weight, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[u] = 0;
    heap.push({0, u});
    CycleFound best;
    Vertex closing = kNoVertex;
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (done[v]) continue;
        done[v] = true;
        if (d >= best.weight) break;
        for (const Arc& a : g.out(v)) {
            if (!ok(a.other)) continue;
            Weight nd = d + a.weight;
            if (a.other == u) {
                if (nd < best.weight) {
                    best.weight = nd;
                    closing = v;
                }
                continue;
            }
            if (nd < dist[a.other]) {
                dist[a.other] = nd;
                parent[a.other] = a.id;
                heap.push({nd, a.other});
            }
        }
    }
    if (closing != kNoVertex) best.walk = walk_from_parents(g, parent, u, closing);
    return best;
}

// Exact girth by one restricted search per vertex. Library-side helper for
// small recursion bases; independent from the test oracle.
inline CycleFound smallest_cycle(const DirectedGraph& g) {
    CycleFound best;
    for (Vertex u = 0; u < g.n(); ++u) {
        CycleFound c = shortest_cycle_through(g, u);
        if (c.weight < best.weight) best = std::move(c);
    }
    return best;
}

}  // namespace girthkit

#endif  // GIRTHKIT_SHORTEST_PATHS_HPP
