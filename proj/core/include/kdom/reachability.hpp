#pragma once

#include "kdom/graph.hpp"
#include "kdom/street_network.hpp"

namespace kdom {

struct ReachabilityConfig {
    /// Reachability threshold in meters; must be > 0.
    double threshold_t = 0.0;
};

/// Builds the reachability graph of `net`: same vertices and labels, with an
/// edge (u,v) exactly when the shortest-path distance in the street network
/// is strictly below threshold_t. Distances are plain double sums, no
/// epsilon; a pair at exactly threshold_t meters gets no edge.
///
/// Runs one Dijkstra per source, abandoned once the frontier reaches the
/// threshold. Each pair is decided by the search rooted at its lower-index
/// endpoint, which keeps the output exactly symmetric.
Graph build_reachability(const StreetNetwork& net, const ReachabilityConfig& cfg);

}  // namespace kdom
