#include "kdom/street_network.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace kdom {

StreetNetwork StreetNetwork::from_edges(
    std::size_t n, std::span<const std::tuple<Vertex, Vertex, double>> weighted_edges) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return from_edges(std::move(labels), weighted_edges);
}

StreetNetwork StreetNetwork::from_edges(
    std::vector<std::string> labels,
    std::span<const std::tuple<Vertex, Vertex, double>> weighted_edges) {
    // Normalize to u < v, collapse duplicates, reject conflicting lengths.
    std::map<std::pair<Vertex, Vertex>, double> unique;
    for (const auto& [u, v, w] : weighted_edges) {
        if (!(w > 0.0) || !std::isfinite(w))
            throw std::invalid_argument("edge length must be a positive finite number");
        auto key = std::minmax(u, v);
        auto [it, inserted] = unique.emplace(std::pair{key.first, key.second}, w);
        if (!inserted && it->second != w)
            throw std::invalid_argument("conflicting lengths for duplicate edge");
    }

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(unique.size());
    for (const auto& [e, w] : unique) edges.push_back(e);

    StreetNetwork net;
    net.graph_ = Graph::from_edges(std::move(labels), edges);

    // Lengths aligned with the CSR adjacency built above.
    const std::size_t n = net.graph_.vertex_count();
    net.lengths_.resize(2 * net.graph_.edge_count());
    for (Vertex v = 0; v < n; ++v) {
        auto nbrs = net.graph_.neighbors(v);
        const std::size_t off = net.graph_.adjacency_offset(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            auto key = std::minmax(v, nbrs[i]);
            net.lengths_[off + i] = unique.at({key.first, key.second});
        }
    }
    return net;
}

double StreetNetwork::length(Vertex u, Vertex v) const {
    auto nbrs = graph_.neighbors(u);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
    if (it == nbrs.end() || *it != v)
        throw std::invalid_argument("no edge " + graph_.label(u) + "-" + graph_.label(v));
    return lengths(u)[static_cast<std::size_t>(it - nbrs.begin())];
}

}  // namespace kdom
