#ifndef GIRTHKIT_DRIVER_HPP
#define GIRTHKIT_DRIVER_HPP

#include <functional>

#include "girthkit/graph.hpp"
#include "girthkit/result.hpp"
#include "girthkit/rng.hpp"

namespace girthkit {

// Every cycle lives inside one strongly connected component, so a girth
// routine for strongly connected inputs is run per nontrivial component and
// the witnesses are mapped back.
inline GirthResult per_component(
    const DirectedGraph& g, std::uint64_t seed,
    const std::function<GirthResult(const DirectedGraph&, std::uint64_t)>& run) {
    SccDecomposition comps = scc(g);
    if (comps.component_count == 1 && g.n() > 0) return run(g, seed);

    GirthResult best;
    best.seed = seed;
    bool all_exact = true;
    double factor = 1.0;
    for (std::size_t c = 0; c < comps.component_count; ++c) {
        const auto& members = comps.members[c];
        if (members.size() < 2) continue;
        InducedSubgraph sub = induced_subgraph(g, members);
        GirthResult r = run(sub.graph, derive_seed(seed, Stream::Recursion, {c}));
        all_exact = all_exact && r.guarantee == Guarantee::Exact;
        factor = std::max(factor, r.factor);
        best.algorithm = r.algorithm;
        if (!r.finite()) continue;
        std::vector<Vertex> walk;
        for (Vertex v : r.witness) walk.push_back(sub.to_parent[v]);
        best.offer(r.estimate, std::move(walk));
    }
    best.guarantee = all_exact ? Guarantee::Exact : Guarantee::Factor;
    best.factor = all_exact ? 1.0 : factor;
    return best;
}

}  // namespace girthkit

#endif  // GIRTHKIT_DRIVER_HPP
