#ifndef GIRTHKIT_RESULT_HPP
#define GIRTHKIT_RESULT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "girthkit/common.hpp"

namespace girthkit {

enum class Guarantee { Exact, Factor };

// An upper bound on the girth. When finite, `witness` is a closed walk in the
// input graph (first vertex not repeated) whose weight is exactly `estimate`.
struct GirthResult {
    Weight estimate = kInfinity;
    std::vector<Vertex> witness;
    Guarantee guarantee = Guarantee::Exact;
    double factor = 1.0;
    std::string algorithm;
    std::uint64_t seed = 0;

    bool finite() const noexcept { return is_finite(estimate); }

    // Keeps the first-discovered walk among equal weights.
    bool offer(Weight weight, std::vector<Vertex> walk) {
        if (weight >= estimate) return false;
        estimate = weight;
        witness = std::move(walk);
        return true;
    }
};

enum class ProvenanceKind { LandmarkTree, SearchTree };

// Which search inserted an edge: a landmark in/out tree, or the pruned search
// from `source` at distance scale `scale`.
struct Provenance {
    ProvenanceKind kind = ProvenanceKind::LandmarkTree;
    Vertex source = 0;
    int scale = 0;
};

// Edge subset of a host graph; `edges` is sorted and unique, `provenance`
// is parallel to it and records the first search that added each edge.
struct SpannerSubgraph {
    std::vector<EdgeId> edges;
    std::vector<Provenance> provenance;
    double stretch = 1.0;
    double epsilon = 0.0;

    std::size_t edge_count() const noexcept { return edges.size(); }
};

}  // namespace girthkit

#endif  // GIRTHKIT_RESULT_HPP
