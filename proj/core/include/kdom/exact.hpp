#pragma once

#include <cstdint>
#include <vector>

#include "kdom/graph.hpp"

namespace kdom {

/// Outcome of the exact search. When `solved` is false the node budget ran
/// out and nothing is claimed about the optimum — never a guessed answer.
struct ExactResult {
    bool solved = false;
    int optimum_size = -1;
    std::vector<Vertex> witness;  // a k-dominating set of optimum size
    std::uint64_t nodes_explored = 0;
};

inline constexpr std::uint64_t kDefaultExactNodeBudget = 20'000'000;

/// Minimum k-dominating set by iterative deepening over the target size:
/// for m = 0, 1, ... run a depth-first search over vertex inclusions,
/// branching on a most-deficient vertex and pruning branches that cannot
/// repair some vertex within the remaining picks. The first size that
/// admits a feasible set is optimal. Intended for small instances
/// (roughly n <= 25); larger ones should set a budget and may get
/// `solved == false`.
ExactResult exact_min_k_dominating(const Graph& g, int k,
                                   std::uint64_t node_budget = kDefaultExactNodeBudget);

}  // namespace kdom
