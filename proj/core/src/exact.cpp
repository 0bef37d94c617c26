#include "kdom/exact.hpp"

#include <stdexcept>

#include "kdom/coverage.hpp"

namespace kdom {

namespace {

struct BudgetExceeded {};

class ExactSearch {
public:
    ExactSearch(const Graph& g, int k, std::uint64_t budget) : g_(g), k_(k), budget_(budget) {}

    ExactResult run() {
        const int n = static_cast<int>(g_.vertex_count());
        ExactResult result;
        try {
            for (int m = 0; m <= n; ++m) {
                CoverageState root(g_, k_);
                std::vector<std::uint8_t> excluded(g_.vertex_count(), 0);
                if (dfs(root, excluded, m)) {
                    result.solved = true;
                    result.optimum_size = m;
                    result.witness = std::move(witness_);
                    break;
                }
            }
            // m = n always succeeds: D = V is k-dominating.
            if (!result.solved) throw std::logic_error("exact search missed the full vertex set");
        } catch (const BudgetExceeded&) {
            result.solved = false;
        }
        result.nodes_explored = nodes_;
        return result;
    }

private:
    bool dfs(const CoverageState& state, std::vector<std::uint8_t>& excluded, int m) {
        if (++nodes_ > budget_) throw BudgetExceeded{};
        if (state.is_k_dominating()) {
            witness_ = state.solution();
            return true;
        }
        const int remaining = m - static_cast<int>(state.solution_size());
        if (remaining <= 0) return false;

        // Pick the deficient vertex needing the most picks; prune when some
        // vertex cannot be repaired at all or not within `remaining`.
        const std::size_t n = g_.vertex_count();
        Vertex branch_v = 0;
        int max_need = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (state.in_solution(v) || state.covered_count(v) >= k_) continue;
            const bool can_self = !excluded[v];
            int available = 0;
            for (Vertex w : g_.neighbors(v))
                if (!state.in_solution(w) && !excluded[w]) ++available;
            if (!can_self && state.covered_count(v) + available < k_) return false;
            const int need = can_self ? 1 : k_ - state.covered_count(v);
            if (need > remaining) return false;
            if (need > max_need) {
                max_need = need;
                branch_v = v;
            }
        }

        // Candidates that help branch_v: itself, then selectable neighbors.
        std::vector<Vertex> candidates;
        if (!excluded[branch_v]) candidates.push_back(branch_v);
        for (Vertex w : g_.neighbors(branch_v))
            if (!state.in_solution(w) && !excluded[w]) candidates.push_back(w);

        // Try each candidate; once tried, exclude it from later branches so
        // no vertex set is explored twice. Exclusions are undone on return.
        std::vector<Vertex> tried;
        bool found = false;
        for (Vertex c : candidates) {
            CoverageState child = state;
            child.add_vertex(c);
            if (dfs(child, excluded, m)) {
                found = true;
                break;
            }
            excluded[c] = 1;
            tried.push_back(c);
        }
        for (Vertex c : tried) excluded[c] = 0;
        return found;
    }

    const Graph& g_;
    int k_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<Vertex> witness_;
};

}  // namespace

ExactResult exact_min_k_dominating(const Graph& g, int k, std::uint64_t node_budget) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    return ExactSearch(g, k, node_budget).run();
}

}  // namespace kdom
