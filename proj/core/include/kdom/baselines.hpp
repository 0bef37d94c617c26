#pragma once

#include <functional>
#include <span>
#include <vector>

#include "kdom/coverage.hpp"
#include "kdom/graph.hpp"
#include "kdom/solvers.hpp"

namespace kdom {

/// Standard greedy baseline: repeatedly add a vertex whose closed
/// neighborhood contains the most vertices that are not yet dominated
/// enough, ties broken uniformly at random. The candidate itself counts
/// toward its own score while it is still undominated. For k = 1 the
/// per-step argmax set coincides with greedy_k_domination's.
std::vector<Vertex> standard_greedy(const Graph& g, const SolveConfig& cfg,
                                    const StepObserver& observe = {});

/// Closed-neighborhood score used by standard_greedy.
std::int64_t standard_score(const CoverageState& state, Vertex u);

/// All vertices outside the solution attaining the maximum standard score,
/// sorted.
std::vector<Vertex> standard_score_argmax(const CoverageState& state);

/// Called after every layered-MIS round with the not-dominated-enough set U
/// and the independent set M that was added (both sorted).
using CoutureRoundObserver =
    std::function<void(int round, std::span<const Vertex> undominated,
                       std::span<const Vertex> independent_set)>;

/// Couture et al. baseline: while the solution is not k-dominating, take a
/// maximal independent set of the subgraph induced by the vertices that are
/// not dominated enough — built greedily along a random permutation — and
/// add it wholesale. Finishes in at most k rounds.
std::vector<Vertex> couture_k_domination(const Graph& g, const SolveConfig& cfg,
                                         const CoutureRoundObserver& observe = {});

}  // namespace kdom
