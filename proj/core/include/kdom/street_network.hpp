#pragma once

#include <span>
#include <tuple>
#include <vector>

#include "kdom/graph.hpp"

namespace kdom {

/// Undirected street network: a Graph plus a positive length in meters per
/// edge. Lengths are stored per adjacency slot, so `lengths(v)[i]` is the
/// length of the edge to `graph().neighbors(v)[i]`; symmetry holds by build.
class StreetNetwork {
public:
    StreetNetwork() = default;

    /// `weighted_edges` pairs an index edge with its length. Parallel edges
    /// must carry the same length; lengths must be strictly positive and finite.
    static StreetNetwork from_edges(
        std::vector<std::string> labels,
        std::span<const std::tuple<Vertex, Vertex, double>> weighted_edges);

    static StreetNetwork from_edges(
        std::size_t n, std::span<const std::tuple<Vertex, Vertex, double>> weighted_edges);

    const Graph& graph() const noexcept { return graph_; }

    /// Lengths aligned with graph().neighbors(v).
    std::span<const double> lengths(Vertex v) const {
        const std::size_t deg = graph_.degree(v);  // validates v
        return {lengths_.data() + graph_.adjacency_offset(v), deg};
    }

    /// Length of edge (u,v). Throws std::invalid_argument if absent.
    double length(Vertex u, Vertex v) const;

private:
    Graph graph_;
    std::vector<double> lengths_;
};

}  // namespace kdom
