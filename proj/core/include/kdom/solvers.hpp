#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "kdom/coverage.hpp"
#include "kdom/graph.hpp"
#include "kdom/rng.hpp"

namespace kdom {

struct SolveConfig {
    int k = 1;
    std::uint64_t seed = kDefaultSeed;
    /// Beam width b; only beam_k_domination reads it.
    int beam_width = 1;
};

/// A vertex subset under construction plus its cached objective value.
struct PartialSolution {
    std::vector<Vertex> members;  // sorted
    std::int64_t objective_value = 0;
    CoverageState state;
};

/// Retained partial solutions of one beam round, best first.
using Beam = std::vector<PartialSolution>;

/// Called before each greedy addition with the state as it was when the
/// choice was made and the vertex about to be added.
using StepObserver = std::function<void(const CoverageState& before, Vertex chosen)>;

/// Called after each beam round with the retained (sorted, truncated) beam.
using BeamObserver = std::function<void(int round, const Beam& retained)>;

/// Greedy heuristic on the coverage objective: repeatedly add a vertex of
/// maximum gain, breaking ties uniformly at random, until the solution is
/// k-dominating. Deterministic for a fixed (graph, config). The returned
/// set is re-verified by full recount before returning.
std::vector<Vertex> greedy_k_domination(const Graph& g, const SolveConfig& cfg,
                                        const StepObserver& observe = {});

/// Beam-search generalization: each round expands every retained partial
/// solution by one vertex in all ways, removes duplicate member sets, sorts
/// by objective (ties in random order), keeps the best `beam_width`, and
/// returns the highest-ranked retained solution that is k-dominating.
///
/// With beam_width = 1 this performs exactly the greedy search above, and it
/// consumes the RNG identically — one draw per candidate in canonical
/// member-set order — so the two return bitwise-equal solutions for the same
/// seed.
std::vector<Vertex> beam_k_domination(const Graph& g, const SolveConfig& cfg,
                                      const BeamObserver& observe = {});

/// All vertices outside the solution attaining the maximum gain, sorted.
std::vector<Vertex> gain_argmax(const CoverageState& state);

}  // namespace kdom
