#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kdom/graph.hpp"

namespace kdom {

/// Incrementally maintained coverage bookkeeping for a growing solution D.
///
/// For every vertex it tracks the uncapped count of neighbors inside D and
/// the count of neighbors that are still "not dominated enough" (outside D
/// with fewer than k selected neighbors). Those two arrays make the gain of
/// adding a vertex — the change in the coverage objective — a constant-time
/// read, which is what the greedy and beam solvers iterate on.
///
/// The solution only ever grows; there is no removal. Beam search copies the
/// whole state instead of backtracking. A state has a single owner; the
/// underlying Graph is shared and immutable.
class CoverageState {
public:
    CoverageState(const Graph& g, int k);

    const Graph& graph() const noexcept { return *graph_; }
    int k() const noexcept { return k_; }

    bool in_solution(Vertex v) const { return in_d_[check(v)] != 0; }
    std::int64_t solution_size() const noexcept { return size_d_; }

    /// Capped coverage C(D,v) = min(k, |N(v) ∩ D|).
    int coverage(Vertex v) const {
        const std::int32_t c = cov_[check(v)];
        return c < k_ ? c : k_;
    }

    /// Uncapped |N(v) ∩ D|.
    int covered_count(Vertex v) const { return cov_[check(v)]; }

    /// |{w ∈ N(u) : w ∉ D, |N(w) ∩ D| < k}|.
    int undominated_neighbor_count(Vertex u) const { return undom_nbrs_[check(u)]; }

    /// Σ over v ∉ D of C(D,v), maintained incrementally.
    std::int64_t objective() const noexcept { return objective_; }

    /// True iff every vertex outside D has coverage at least k.
    bool is_k_dominating() const noexcept { return deficient_ == 0; }

    /// Change in objective() if u were added: undominated neighbors of u
    /// minus u's own capped coverage. Throws if u is already in D.
    std::int64_t gain(Vertex u) const {
        require_outside(u);
        const std::int32_t c = cov_[u];
        return static_cast<std::int64_t>(undom_nbrs_[u]) - (c < k_ ? c : k_);
    }

    /// Adds u to D and updates all counters. Cost is O(deg(u)) plus O(deg(w))
    /// for every neighbor w whose coverage just reached k.
    void add_vertex(Vertex u);

    /// Members of D, sorted.
    std::vector<Vertex> solution() const;

private:
    Vertex check(Vertex v) const;
    void require_outside(Vertex u) const;

    const Graph* graph_;
    int k_;
    std::vector<std::uint8_t> in_d_;
    std::vector<std::int32_t> cov_;         // uncapped |N(v) ∩ D|
    std::vector<std::int32_t> undom_nbrs_;  // not-dominated-enough neighbors
    std::int64_t size_d_ = 0;
    std::int64_t deficient_ = 0;  // |{v ∉ D : cov < k}|
    std::int64_t objective_ = 0;
};

/// Independent feasibility recount straight from the adjacency lists: true
/// iff every vertex outside `members` has at least k neighbors in it.
/// Deliberately bypasses CoverageState so callers can re-verify solver
/// output. `members` need not be sorted; duplicates and out-of-range throw.
bool is_k_dominating_set(const Graph& g, int k, std::span<const Vertex> members);

/// Vertices violating the k-domination constraint, with their coverage,
/// sorted by index. Empty means feasible.
std::vector<std::pair<Vertex, int>> domination_violations(const Graph& g, int k,
                                                          std::span<const Vertex> members);

}  // namespace kdom
