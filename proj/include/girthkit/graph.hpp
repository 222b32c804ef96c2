#ifndef GIRTHKIT_GRAPH_HPP
#define GIRTHKIT_GRAPH_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "girthkit/common.hpp"

namespace girthkit {

struct Edge {
    Vertex tail = 0;
    Vertex head = 0;
    Weight weight = 1;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// One adjacency entry; `other` is the head for out-lists and the tail for
// in-lists.
struct Arc {
    Vertex other;
    Weight weight;
    EdgeId id;
};

// Immutable weighted digraph in CSR form. Edge ids are positions in the
// (tail, head)-sorted edge list, which is also the order of the out-arcs.
class DirectedGraph {
public:
    DirectedGraph() : out_offsets_(1, 0), in_offsets_(1, 0) {}

    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return edges_.size(); }

    std::span<const Arc> out(Vertex v) const {
        return {out_arcs_.data() + out_offsets_[v], out_arcs_.data() + out_offsets_[v + 1]};
    }
    std::span<const Arc> in(Vertex v) const {
        return {in_arcs_.data() + in_offsets_[v], in_arcs_.data() + in_offsets_[v + 1]};
    }
    std::size_t out_degree(Vertex v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
    std::size_t in_degree(Vertex v) const { return in_offsets_[v + 1] - in_offsets_[v]; }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    std::span<const Edge> edges() const noexcept { return edges_; }
    bool auxiliary(EdgeId e) const { return auxiliary_[e]; }
    bool has_auxiliary() const noexcept {
        return std::find(auxiliary_.begin(), auxiliary_.end(), true) != auxiliary_.end();
    }

    // Largest edge weight; 1 for an empty or unit graph.
    Weight max_weight() const noexcept { return max_weight_; }
    bool weighted() const noexcept { return weighted_; }
    bool unit_weights() const noexcept { return unit_; }

    std::optional<EdgeId> find_edge(Vertex tail, Vertex head) const {
        auto arcs = out(tail);
        auto it = std::lower_bound(arcs.begin(), arcs.end(), head,
                                   [](const Arc& a, Vertex h) { return a.other < h; });
        if (it == arcs.end() || it->other != head) return std::nullopt;
        return it->id;
    }

    friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
        return a.n_ == b.n_ && a.weighted_ == b.weighted_ && a.edges_ == b.edges_ &&
               a.auxiliary_ == b.auxiliary_;
    }

    // Validating constructor shared by every builder. Zero weights are accepted
    // only where `auxiliary` marks the edge.
    static DirectedGraph from_edges(std::size_t n, std::vector<Edge> edges,
                                    std::vector<bool> auxiliary, bool weighted) {
        if (auxiliary.empty()) auxiliary.assign(edges.size(), false);
        if (auxiliary.size() != edges.size())
            throw Error(Errc::InvalidParameters, "auxiliary flags do not match edge count");
        if (n >= kNoVertex) throw Error(Errc::InvalidParameters, "too many vertices");

        std::vector<std::size_t> order(edges.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        for (std::size_t k = 0; k < edges.size(); ++k) {
            const Edge& e = edges[k];
            if (e.tail >= n || e.head >= n)
                throw Error(Errc::VertexOutOfRange, "edge (" + std::to_string(e.tail) + "," +
                                                        std::to_string(e.head) + ") with n=" +
                                                        std::to_string(n));
            if (e.tail == e.head)
                throw Error(Errc::SelfLoop, "self-loop at vertex " + std::to_string(e.tail));
            if (e.weight < 0 || (e.weight == 0 && !auxiliary[k]))
                throw Error(Errc::NonPositiveWeight,
                            "edge (" + std::to_string(e.tail) + "," + std::to_string(e.head) +
                                ") has weight " + std::to_string(e.weight));
        }
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return std::pair(edges[a].tail, edges[a].head) < std::pair(edges[b].tail, edges[b].head);
        });

        DirectedGraph g;
        g.n_ = n;
        g.edges_.reserve(edges.size());
        g.auxiliary_.reserve(edges.size());
        for (std::size_t k : order) {
            if (!g.edges_.empty() && g.edges_.back().tail == edges[k].tail &&
                g.edges_.back().head == edges[k].head)
                throw Error(Errc::DuplicateEdge, "duplicate edge (" + std::to_string(edges[k].tail) +
                                                     "," + std::to_string(edges[k].head) + ")");
            g.edges_.push_back(edges[k]);
            g.auxiliary_.push_back(auxiliary[k]);
        }

        g.max_weight_ = 1;
        g.unit_ = true;
        for (const Edge& e : g.edges_) {
            g.max_weight_ = std::max(g.max_weight_, e.weight);
            if (e.weight != 1) g.unit_ = false;
        }
        g.weighted_ = weighted || !g.unit_;

        g.out_offsets_.assign(n + 1, 0);
        g.in_offsets_.assign(n + 1, 0);
        for (const Edge& e : g.edges_) {
            ++g.out_offsets_[e.tail + 1];
            ++g.in_offsets_[e.head + 1];
        }
        for (std::size_t v = 0; v < n; ++v) {
            g.out_offsets_[v + 1] += g.out_offsets_[v];
            g.in_offsets_[v + 1] += g.in_offsets_[v];
        }
        g.out_arcs_.resize(g.edges_.size());
        g.in_arcs_.resize(g.edges_.size());
        std::vector<std::size_t> in_fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
        for (EdgeId id = 0; id < g.edges_.size(); ++id) {
            const Edge& e = g.edges_[id];
            g.out_arcs_[id] = Arc{e.head, e.weight, id};
            // edges are tail-sorted, so in-lists come out sorted by tail
            g.in_arcs_[in_fill[e.head]++] = Arc{e.tail, e.weight, id};
        }
        return g;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<bool> auxiliary_;
    std::vector<std::size_t> out_offsets_;
    std::vector<Arc> out_arcs_;
    std::vector<std::size_t> in_offsets_;
    std::vector<Arc> in_arcs_;
    Weight max_weight_ = 1;
    bool weighted_ = false;
    bool unit_ = true;
};

// User-facing constructor: every weight must be >= 1.
inline DirectedGraph build_graph(std::size_t n, std::vector<Edge> edges, bool weighted = false) {
    return DirectedGraph::from_edges(n, std::move(edges), {}, weighted);
}

// Same edges with every direction flipped; edge ids are not preserved.
inline DirectedGraph reverse(const DirectedGraph& g) {
    std::vector<Edge> edges;
    std::vector<bool> aux;
    edges.reserve(g.m());
    for (EdgeId e = 0; e < g.m(); ++e) {
        const Edge& x = g.edge(e);
        edges.push_back({x.head, x.tail, x.weight});
        aux.push_back(g.auxiliary(e));
    }
    return DirectedGraph::from_edges(g.n(), std::move(edges), std::move(aux), g.weighted());
}

// Subgraph induced by `vertices`; vertex k of the result is vertices[k].
struct InducedSubgraph {
    DirectedGraph graph;
    std::vector<Vertex> to_parent;
    std::vector<EdgeId> edge_to_parent;
};

inline InducedSubgraph induced_subgraph(const DirectedGraph& g, std::span<const Vertex> vertices) {
    std::vector<Vertex> local(g.n(), kNoVertex);
    InducedSubgraph out;
    out.to_parent.assign(vertices.begin(), vertices.end());
    for (std::size_t k = 0; k < vertices.size(); ++k) local[vertices[k]] = static_cast<Vertex>(k);
    std::vector<Edge> edges;
    std::vector<bool> aux;
    std::vector<std::pair<Edge, EdgeId>> tagged;
    for (Vertex v : vertices) {
        for (const Arc& a : g.out(v)) {
            if (local[a.other] == kNoVertex) continue;
            tagged.push_back({Edge{local[v], local[a.other], a.weight}, a.id});
        }
    }
    std::sort(tagged.begin(), tagged.end(), [](const auto& x, const auto& y) {
        return std::pair(x.first.tail, x.first.head) < std::pair(y.first.tail, y.first.head);
    });
    for (auto& [e, id] : tagged) {
        edges.push_back(e);
        aux.push_back(g.auxiliary(id));
        out.edge_to_parent.push_back(id);
    }
    out.graph = DirectedGraph::from_edges(vertices.size(), std::move(edges), std::move(aux),
                                          g.weighted());
    return out;
}

// Subgraph keeping exactly the listed edge ids (all vertices kept).
inline DirectedGraph edge_subgraph(const DirectedGraph& g, std::span<const EdgeId> ids) {
    std::vector<Edge> edges;
    std::vector<bool> aux;
    for (EdgeId e : ids) {
        if (e >= g.m()) throw Error(Errc::NotASubgraph, "edge id " + std::to_string(e));
        edges.push_back(g.edge(e));
        aux.push_back(g.auxiliary(e));
    }
    return DirectedGraph::from_edges(g.n(), std::move(edges), std::move(aux), g.weighted());
}

inline Weight walk_weight(const DirectedGraph& g, std::span<const Vertex> walk) {
    if (walk.size() < 2) throw Error(Errc::NotAClosedWalk, "closed walk needs two vertices");
    Weight total = 0;
    for (std::size_t k = 0; k < walk.size(); ++k) {
        Vertex a = walk[k], b = walk[(k + 1) % walk.size()];
        if (a >= g.n() || b >= g.n()) throw Error(Errc::NotAClosedWalk, "vertex out of range");
        auto e = g.find_edge(a, b);
        if (!e)
            throw Error(Errc::NotAClosedWalk,
                        "missing edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        total += g.edge(*e).weight;
    }
    return total;
}

inline bool is_closed_walk(const DirectedGraph& g, std::span<const Vertex> walk) {
    try {
        walk_weight(g, walk);
        return true;
    } catch (const Error&) {
        return false;
    }
}

struct SccDecomposition {
    std::vector<std::uint32_t> component_id;
    std::size_t component_count = 0;
    std::vector<std::vector<Vertex>> members;
};

// Iterative Tarjan. Component ids come out in reverse topological order.
inline SccDecomposition scc(const DirectedGraph& g) {
    const std::size_t n = g.n();
    constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> index(n, kUnset), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<Vertex> stack;
    std::vector<std::pair<Vertex, std::size_t>> call;
    SccDecomposition out;
    out.component_id.assign(n, kUnset);
    std::uint32_t counter = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != kUnset) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, pos] = call.back();
            auto arcs = g.out(v);
            if (pos < arcs.size()) {
                Vertex w = arcs[pos++].other;
                if (index[w] == kUnset) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            Vertex done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == index[done]) {
                std::vector<Vertex> comp;
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    out.component_id[w] = static_cast<std::uint32_t>(out.members.size());
                    comp.push_back(w);
                } while (w != done);
                std::sort(comp.begin(), comp.end());
                out.members.push_back(std::move(comp));
            }
        }
    }
    out.component_count = out.members.size();
    return out;
}

// True iff the graph contains a directed cycle (iterative three-color DFS).
inline bool has_cycle(const DirectedGraph& g, Weight max_edge_weight = kInfinity) {
    std::vector<std::uint8_t> color(g.n(), 0);
    std::vector<std::pair<Vertex, std::size_t>> call;
    for (Vertex root = 0; root < g.n(); ++root) {
        if (color[root]) continue;
        color[root] = 1;
        call.push_back({root, 0});
        while (!call.empty()) {
            auto& [v, pos] = call.back();
            auto arcs = g.out(v);
            if (pos < arcs.size()) {
                const Arc& a = arcs[pos++];
                if (a.weight > max_edge_weight) continue;
                if (color[a.other] == 1) return true;
                if (color[a.other] == 0) {
                    color[a.other] = 1;
                    call.push_back({a.other, 0});
                }
                continue;
            }
            color[v] = 2;
            call.pop_back();
        }
    }
    return false;
}

}  // namespace girthkit

#endif  // GIRTHKIT_GRAPH_HPP
