#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kdom/exact.hpp"
#include "kdom/graph.hpp"
#include "kdom/solvers.hpp"

namespace kdom {

enum class Method { greedy, beam, standard, couture, exact };

const char* method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

/// One (method, graph, k, seeds) experiment. Seeds default to ten values
/// derived from a master seed; they must be non-empty and distinct, and
/// beam_width must be present exactly for the beam method.
struct ExperimentPlan {
    std::string graph_name;  // echoed into reports
    Method method = Method::greedy;
    int k = 1;
    std::optional<int> beam_width;
    std::vector<std::uint64_t> seeds;
    /// When false, trials run concurrently and wall times are suppressed
    /// (reported as zero); timings are only meaningful measured serially.
    bool serial_timing = true;
    /// When false, times are recorded as exactly zero, which makes reports
    /// byte-reproducible.
    bool measure_time = true;
    std::uint64_t exact_node_budget = kDefaultExactNodeBudget;
};

/// Per-seed solution sizes and wall times with their summary statistics.
/// Standard deviations use the sample (n-1) convention.
struct TrialStats {
    std::string graph_name;
    Method method = Method::greedy;
    int k = 1;
    std::optional<int> beam_width;
    std::vector<std::int64_t> sizes;
    std::vector<double> times_s;
    std::int64_t min_size = 0;
    double mean_size = 0.0;
    double stddev_size = 0.0;
    double mean_time_s = 0.0;
    double stddev_time_s = 0.0;
    /// Single-seed runs: the stddev is reported as 0.0 but carries no
    /// information, and table output flags them.
    bool degenerate_sample = false;

    static TrialStats from_samples(std::vector<std::int64_t> sizes, std::vector<double> times_s);
};

/// A solver fixed to a plan, used to inject custom methods in tests.
using SolverFn = std::function<std::vector<Vertex>(const Graph&, const SolveConfig&)>;

/// Runs one solver invocation per seed, re-verifies every returned set by
/// full recount before recording its size, and summarizes. An infeasible
/// result throws std::logic_error: that is a solver defect, never data.
TrialStats run_experiment(const Graph& g, const ExperimentPlan& plan);
TrialStats run_experiment(const Graph& g, const ExperimentPlan& plan, const SolverFn& solver);

enum class ReportFormat { csv, table };

/// Renders rows as CSV (header: graph,method,k,b,n_seeds,min,mean,stddev,
/// mean_time_s,stddev_time_s) or as an aligned table. Throws on empty input.
std::string emit_report(std::span<const TrialStats> stats, ReportFormat format);

}  // namespace kdom
