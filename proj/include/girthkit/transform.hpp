#ifndef GIRTHKIT_TRANSFORM_HPP
#define GIRTHKIT_TRANSFORM_HPP

#include <algorithm>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "girthkit/graph.hpp"
#include "girthkit/io.hpp"

namespace girthkit {

// Rooted out-tree with every leaf at the same depth ceil(log_q L).
struct GadgetTree {
    std::vector<std::vector<std::uint32_t>> children;  // node 0 is the root
    std::vector<std::uint32_t> leaves;                 // left-to-right order
    unsigned depth = 0;
    unsigned arity = 2;

    std::size_t node_count() const noexcept { return children.size(); }
};

namespace detail {

class GadgetBuilder {
public:
    GadgetBuilder(GadgetTree& tree, std::uint64_t q) : tree_(tree), q_(q) {}

    std::uint32_t complete(unsigned depth) {
        std::uint32_t node = make();
        if (depth == 0) return node;
        for (std::uint64_t c = 0; c < q_; ++c) {
            std::uint32_t child = complete(depth - 1);
            tree_.children[node].push_back(child);
        }
        return node;
    }

    // L leaves at depth d, L <= q^d. The root gets a complete subtree per unit
    // of the leading q-ary digit plus one child for the remainder.
    std::uint32_t build(std::uint64_t leaves, unsigned depth) {
        if (depth == 0) return make();
        std::uint64_t block = 1;
        for (unsigned k = 1; k < depth; ++k) block *= q_;
        std::uint32_t node = make();
        const std::uint64_t digit = leaves / block, rem = leaves % block;
        for (std::uint64_t c = 0; c < digit; ++c) {
            std::uint32_t child = complete(depth - 1);
            tree_.children[node].push_back(child);
        }
        if (rem > 0) {
            std::uint32_t child = build(rem, depth - 1);
            tree_.children[node].push_back(child);
        }
        return node;
    }

private:
    std::uint32_t make() {
        tree_.children.emplace_back();
        return static_cast<std::uint32_t>(tree_.children.size() - 1);
    }

    GadgetTree& tree_;
    std::uint64_t q_;
};

}  // namespace detail

inline GadgetTree build_gadget_tree(std::uint64_t leaves, std::uint64_t q) {
    if (leaves < 1 || q < 2) throw Error(Errc::InvalidParameters, "gadget tree needs L >= 1, q >= 2");
    GadgetTree tree;
    tree.arity = static_cast<unsigned>(q);
    tree.depth = ceil_log(leaves, q);
    detail::GadgetBuilder(tree, q).build(leaves, tree.depth);
    std::vector<std::uint32_t> stack{0};
    while (!stack.empty()) {
        std::uint32_t v = stack.back();
        stack.pop_back();
        const auto& ch = tree.children[v];
        if (ch.empty()) tree.leaves.push_back(v);
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
    }
    return tree;
}

// Degree-reduced graph. Vertices [0, original_n) are the original vertices;
// auxiliary vertices follow. Every original edge expands to a path whose unique
// "carrier" edge is tagged with the original edge id.
struct ReducedGraph {
    DirectedGraph graph;
    unsigned scale = 1;  // d_reduced(u,v) = scale * d(u,v) between original vertices
    std::size_t original_n = 0;
    std::vector<EdgeId> edge_origin;  // per reduced edge: carried original edge or kNoEdge
    std::vector<EdgeId> aux_edge;     // per auxiliary vertex: least original edge routed through it

    bool is_original(Vertex v) const noexcept { return v < original_n; }
    Vertex origin(Vertex v) const noexcept { return is_original(v) ? v : kNoVertex; }
};

// The input itself viewed as a (trivial) reduction.
inline ReducedGraph identity_reduction(const DirectedGraph& g) {
    ReducedGraph rg;
    rg.graph = g;
    rg.original_n = g.n();
    rg.edge_origin.resize(g.m());
    for (EdgeId e = 0; e < g.m(); ++e) rg.edge_origin[e] = e;
    return rg;
}

struct UnweightedReduceOptions {
    bool reduce_in_degree = false;
};

namespace detail {

struct ReductionDraft {
    std::size_t next_vertex = 0;
    std::vector<Edge> edges;
    std::vector<bool> aux;
    std::vector<EdgeId> carried;  // parallel to edges

    Vertex fresh() { return static_cast<Vertex>(next_vertex++); }
    void add(Vertex a, Vertex b, Weight w, bool auxiliary, EdgeId carry = kNoEdge) {
        edges.push_back({a, b, w});
        aux.push_back(auxiliary);
        carried.push_back(carry);
    }
};

inline ReducedGraph finish_reduction(const DirectedGraph& g, ReductionDraft draft, unsigned scale,
                                     bool weighted) {
    ReducedGraph rg;
    rg.scale = scale;
    rg.original_n = g.n();
    std::vector<std::pair<std::pair<Vertex, Vertex>, EdgeId>> tags;
    for (std::size_t k = 0; k < draft.edges.size(); ++k)
        if (draft.carried[k] != kNoEdge)
            tags.push_back({{draft.edges[k].tail, draft.edges[k].head}, draft.carried[k]});
    rg.graph = DirectedGraph::from_edges(draft.next_vertex, std::move(draft.edges),
                                         std::move(draft.aux), weighted);
    rg.edge_origin.assign(rg.graph.m(), kNoEdge);
    for (auto& [pair, orig] : tags) rg.edge_origin[*rg.graph.find_edge(pair.first, pair.second)] = orig;

    // Auxiliary vertices have in-degree 1 (out side) or out-degree 1 (in side),
    // so each carrier edge sits on a unique chain back to its endpoints.
    rg.aux_edge.assign(rg.graph.n() - g.n(), kNoEdge);
    auto mark = [&](Vertex x, EdgeId e) {
        EdgeId& slot = rg.aux_edge[x - g.n()];
        slot = std::min(slot, e);
    };
    for (EdgeId re = 0; re < rg.graph.m(); ++re) {
        EdgeId orig = rg.edge_origin[re];
        if (orig == kNoEdge) continue;
        for (Vertex x = rg.graph.edge(re).tail; !rg.is_original(x); x = rg.graph.in(x)[0].other) mark(x, orig);
        for (Vertex x = rg.graph.edge(re).head; !rg.is_original(x); x = rg.graph.out(x)[0].other) mark(x, orig);
    }
    return rg;
}

}  // namespace detail

// Uniform-depth tree gadgets: out-degrees <= q = max(2, ceil(m/n)), unit
// weights, and every original edge becomes a path of exactly `scale` edges.
inline ReducedGraph reduce_unweighted(const DirectedGraph& g, UnweightedReduceOptions opts = {}) {
    if (g.weighted()) throw Error(Errc::InvalidParameters, "reduce_unweighted needs a unit-weight graph");
    const std::size_t n = g.n(), m = g.m();
    const std::uint64_t q = std::max<std::uint64_t>(2, n ? ceil_div(m, n) : 2);
    const unsigned t = std::max(1u, ceil_log(std::max<std::size_t>(n, 1), q));

    detail::ReductionDraft draft;
    draft.next_vertex = n;
    std::vector<Vertex> out_slot(m), in_slot(m);
    for (EdgeId e = 0; e < m; ++e) {
        out_slot[e] = g.edge(e).tail;
        in_slot[e] = g.edge(e).head;
    }

    // Builds T(v) on one side; `forward` orients edges away from v.
    auto expand = [&](Vertex v, std::span<const Arc> arcs, std::vector<Vertex>& slot, bool forward) {
        const std::size_t deg = arcs.size();
        if (deg == 0) return;
        auto link = [&](Vertex a, Vertex b) { forward ? draft.add(a, b, 1, false) : draft.add(b, a, 1, false); };
        GadgetTree tree = build_gadget_tree(ceil_div(deg, q), q);
        const unsigned reach = tree.depth + 1;  // v .. leaf .. neighbor when no padding
        std::vector<Vertex> id(tree.node_count());
        for (std::size_t k = 0; k < id.size(); ++k) id[k] = (k == 0 && reach == t) ? v : draft.fresh();
        if (reach < t) {
            Vertex prev = v;
            for (unsigned k = 0; k + 1 < t - reach; ++k) {
                Vertex c = draft.fresh();
                link(prev, c);
                prev = c;
            }
            link(prev, id[0]);
        }
        for (std::size_t k = 0; k < tree.node_count(); ++k)
            for (auto c : tree.children[k]) link(id[k], id[c]);
        for (std::size_t k = 0; k < deg; ++k) slot[arcs[k].id] = id[tree.leaves[k / q]];
    };

    for (Vertex u = 0; u < n; ++u) expand(u, g.out(u), out_slot, true);
    if (opts.reduce_in_degree) {
        for (Vertex v = 0; v < n; ++v) expand(v, g.in(v), in_slot, false);
    }
    for (EdgeId e = 0; e < m; ++e) draft.add(out_slot[e], in_slot[e], 1, false, e);
    return detail::finish_reduction(g, std::move(draft), opts.reduce_in_degree ? 2 * t - 1 : t, false);
}

// Total-degree bound used by reduce_weighted: max(3, ceil(m/n)). A vertex on
// a cycle behind a fan tree needs degree 3, so ceil(m/n) alone is not reachable
// for sparse inputs.
inline std::size_t weighted_degree_bound(const DirectedGraph& g) {
    return std::max<std::size_t>(3, g.n() ? ceil_div(g.m(), g.n()) : 3);
}

// Zero-weight fan-out/fan-in trees: every vertex has in+out degree <=
// weighted_degree_bound(g) and distances between original vertices are
// unchanged.
inline ReducedGraph reduce_weighted(const DirectedGraph& g) {
    const std::size_t n = g.n(), m = g.m();
    const std::size_t bound = weighted_degree_bound(g);
    const std::size_t arity = bound - 1;

    detail::ReductionDraft draft;
    draft.next_vertex = n;
    std::vector<Vertex> out_port(m), in_port(m);
    for (EdgeId e = 0; e < m; ++e) {
        out_port[e] = g.edge(e).tail;
        in_port[e] = g.edge(e).head;
    }

    // Recursive fan over arcs[lo, hi); returns the subtree root.
    auto fan = [&](auto&& self, std::span<const Arc> arcs, std::vector<Vertex>& port, bool forward) -> Vertex {
        Vertex node = draft.fresh();
        if (arcs.size() <= arity) {
            for (const Arc& a : arcs) port[a.id] = node;
            return node;
        }
        const std::size_t chunk = ceil_div(arcs.size(), arity);
        for (std::size_t lo = 0; lo < arcs.size(); lo += chunk) {
            Vertex child = self(self, arcs.subspan(lo, std::min(chunk, arcs.size() - lo)), port, forward);
            forward ? draft.add(node, child, 0, true) : draft.add(child, node, 0, true);
        }
        return node;
    };

    for (Vertex v = 0; v < n; ++v) {
        const std::size_t od = g.out_degree(v), id = g.in_degree(v);
        if (od + id <= bound) continue;
        if (od >= 2) draft.add(v, fan(fan, g.out(v), out_port, true), 0, true);
        if (id >= 2) {
            Vertex root = fan(fan, g.in(v), in_port, false);
            draft.add(root, v, 0, true);
        }
    }
    for (EdgeId e = 0; e < m; ++e) draft.add(out_port[e], in_port[e], g.edge(e).weight, g.auxiliary(e), e);
    return detail::finish_reduction(g, std::move(draft), 1, true);
}

struct LiftedCycle {
    std::vector<Vertex> walk;  // closed walk in the original graph
    Weight weight = 0;
};

// Maps a closed walk of rg.graph to the closed walk of original edges it
// routes through.
inline LiftedCycle lift_cycle(const ReducedGraph& rg, const DirectedGraph& original,
                              std::span<const Vertex> cycle) {
    walk_weight(rg.graph, cycle);  // validates closure
    const std::size_t len = cycle.size();
    std::size_t start = len;
    for (std::size_t k = 0; k < len; ++k)
        if (rg.is_original(cycle[k])) {
            start = k;
            break;
        }
    if (start == len) throw Error(Errc::NotAClosedWalk, "walk visits no original vertex");

    LiftedCycle out;
    for (std::size_t step = 0; step < len; ++step) {
        Vertex a = cycle[(start + step) % len], b = cycle[(start + step + 1) % len];
        EdgeId re = *rg.graph.find_edge(a, b);
        EdgeId orig = rg.edge_origin[re];
        if (orig == kNoEdge) continue;
        const Edge& e = original.edge(orig);
        out.walk.push_back(e.tail);
        out.weight += e.weight;
    }
    // consistency: consecutive carried edges must chain head-to-tail
    for (std::size_t k = 0; k < out.walk.size(); ++k) {
        Vertex a = out.walk[k], b = out.walk[(k + 1) % out.walk.size()];
        if (!original.find_edge(a, b)) throw Error(Errc::NotAClosedWalk, "lifted walk is broken");
    }
    return out;
}

// Graph file (with scale/original_n comments) plus `map <aux> <edge>` sidecar.
inline void write_reduced(const ReducedGraph& rg, const std::string& graph_path,
                          const std::string& map_path) {
    write_graph(graph_path, rg.graph,
                {"scale " + std::to_string(rg.scale), "original_n " + std::to_string(rg.original_n)});
    std::ofstream out(map_path);
    if (!out) throw Error(Errc::IoError, "cannot write " + map_path);
    for (std::size_t k = 0; k < rg.aux_edge.size(); ++k)
        out << "map " << rg.original_n + k << ' ' << rg.aux_edge[k] << '\n';
}

}  // namespace girthkit

#endif  // GIRTHKIT_TRANSFORM_HPP
