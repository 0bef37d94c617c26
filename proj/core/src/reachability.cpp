#include "kdom/reachability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kdom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Vertices strictly closer than `limit` to `source` (excluding it), sorted.
std::vector<Vertex> vertices_within(const StreetNetwork& net, Vertex source, double limit,
                                    std::vector<double>& dist) {
    const Graph& g = net.graph();
    dist.assign(g.vertex_count(), kInf);
    using Item = std::pair<double, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[source] = 0.0;
    heap.emplace(0.0, source);

    std::vector<Vertex> reached;
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d >= limit) break;  // positive weights: nothing below the limit remains
        if (d > dist[v]) continue;
        if (v != source) reached.push_back(v);
        auto nbrs = g.neighbors(v);
        auto lens = net.lengths(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            const double nd = d + lens[i];
            if (nd < limit && nd < dist[nbrs[i]]) {
                dist[nbrs[i]] = nd;
                heap.emplace(nd, nbrs[i]);
            }
        }
    }
    std::sort(reached.begin(), reached.end());
    return reached;
}

}  // namespace

Graph build_reachability(const StreetNetwork& net, const ReachabilityConfig& cfg) {
    if (!(cfg.threshold_t > 0.0) || !std::isfinite(cfg.threshold_t))
        throw std::invalid_argument("reachability threshold must be positive and finite");

    const Graph& g = net.graph();
    const std::size_t n = g.vertex_count();
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<double> dist;
    for (Vertex s = 0; s < n; ++s) {
        for (Vertex v : vertices_within(net, s, cfg.threshold_t, dist))
            if (v > s) edges.emplace_back(s, v);
    }
    return Graph::from_edges(g.labels(), edges);
}

}  // namespace kdom
