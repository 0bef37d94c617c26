#include "kdom/baselines.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "kdom/rng.hpp"

namespace kdom {

namespace {

void verify_result(const Graph& g, int k, const std::vector<Vertex>& members) {
    if (!is_k_dominating_set(g, k, members))
        throw std::logic_error("solver returned a set that is not k-dominating");
}

}  // namespace

std::int64_t standard_score(const CoverageState& state, Vertex u) {
    // Open-neighborhood count plus u itself when u is not dominated enough.
    const std::int64_t self =
        !state.in_solution(u) && state.covered_count(u) < state.k() ? 1 : 0;
    return state.undominated_neighbor_count(u) + self;
}

std::vector<Vertex> standard_greedy(const Graph& g, const SolveConfig& cfg,
                                    const StepObserver& observe) {
    if (cfg.k < 1) throw std::invalid_argument("k must be >= 1");
    const std::size_t n = g.vertex_count();
    CoverageState state(g, cfg.k);
    Rng rng(cfg.seed);

    while (!state.is_k_dominating()) {
        bool have = false;
        Vertex best_u = 0;
        std::int64_t best_score = std::numeric_limits<std::int64_t>::min();
        std::uint64_t best_key = 0;
        for (Vertex u = 0; u < n; ++u) {
            if (state.in_solution(u)) continue;
            const std::uint64_t key = rng();
            const std::int64_t score = standard_score(state, u);
            if (!have || score > best_score || (score == best_score && key < best_key)) {
                have = true;
                best_u = u;
                best_score = score;
                best_key = key;
            }
        }
        if (!have) throw std::logic_error("no candidate despite unsatisfied vertices");
        if (observe) observe(state, best_u);
        state.add_vertex(best_u);
    }

    auto members = state.solution();
    verify_result(g, cfg.k, members);
    return members;
}

std::vector<Vertex> standard_score_argmax(const CoverageState& state) {
    const std::size_t n = state.graph().vertex_count();
    std::vector<Vertex> best;
    std::int64_t best_score = std::numeric_limits<std::int64_t>::min();
    for (Vertex u = 0; u < n; ++u) {
        if (state.in_solution(u)) continue;
        const std::int64_t score = standard_score(state, u);
        if (score > best_score) {
            best_score = score;
            best.clear();
        }
        if (score == best_score) best.push_back(u);
    }
    return best;
}

std::vector<Vertex> couture_k_domination(const Graph& g, const SolveConfig& cfg,
                                         const CoutureRoundObserver& observe) {
    if (cfg.k < 1) throw std::invalid_argument("k must be >= 1");
    const std::size_t n = g.vertex_count();
    CoverageState state(g, cfg.k);
    Rng rng(cfg.seed);
    std::vector<std::uint8_t> taken(n, 0);

    int round = 0;
    while (!state.is_k_dominating()) {
        ++round;
        std::vector<Vertex> undominated;
        for (Vertex v = 0; v < n; ++v)
            if (!state.in_solution(v) && state.covered_count(v) < cfg.k)
                undominated.push_back(v);

        // Greedy randomized sequential MIS on the subgraph induced by the
        // undominated vertices: scan a random permutation, take a vertex
        // unless an earlier pick is adjacent.
        std::vector<Vertex> order = undominated;
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[draw_below(rng, i)]);

        std::fill(taken.begin(), taken.end(), 0);
        std::vector<Vertex> mis;
        for (Vertex v : order) {
            bool blocked = false;
            for (Vertex w : g.neighbors(v)) {
                if (taken[w]) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked) {
                taken[v] = 1;
                mis.push_back(v);
            }
        }
        std::sort(mis.begin(), mis.end());

        if (observe) observe(round, undominated, mis);
        for (Vertex v : mis) state.add_vertex(v);
    }

    auto members = state.solution();
    verify_result(g, cfg.k, members);
    return members;
}

}  // namespace kdom
