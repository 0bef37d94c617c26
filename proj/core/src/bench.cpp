#include "kdom/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <set>
#include <stdexcept>

#include "kdom/baselines.hpp"
#include "kdom/coverage.hpp"

namespace kdom {

namespace {

void validate_plan(const ExperimentPlan& plan) {
    if (plan.k < 1) throw std::invalid_argument("k must be >= 1");
    if (plan.seeds.empty()) throw std::invalid_argument("plan needs at least one seed");
    std::set<std::uint64_t> unique(plan.seeds.begin(), plan.seeds.end());
    if (unique.size() != plan.seeds.size())
        throw std::invalid_argument("plan seeds must be distinct");
    const bool is_beam = plan.method == Method::beam;
    if (is_beam != plan.beam_width.has_value())
        throw std::invalid_argument("beam_width must be set exactly for the beam method");
    if (plan.beam_width && *plan.beam_width < 1)
        throw std::invalid_argument("beam width must be >= 1");
}

SolverFn solver_for(const ExperimentPlan& plan) {
    switch (plan.method) {
        case Method::greedy:
            return [](const Graph& g, const SolveConfig& cfg) {
                return greedy_k_domination(g, cfg);
            };
        case Method::beam:
            return [](const Graph& g, const SolveConfig& cfg) {
                return beam_k_domination(g, cfg);
            };
        case Method::standard:
            return [](const Graph& g, const SolveConfig& cfg) {
                return standard_greedy(g, cfg);
            };
        case Method::couture:
            return [](const Graph& g, const SolveConfig& cfg) {
                return couture_k_domination(g, cfg);
            };
        case Method::exact: {
            const std::uint64_t budget = plan.exact_node_budget;
            return [budget](const Graph& g, const SolveConfig& cfg) {
                ExactResult r = exact_min_k_dominating(g, cfg.k, budget);
                if (!r.solved)
                    throw std::runtime_error("exact oracle exhausted its node budget");
                return r.witness;
            };
        }
    }
    throw std::invalid_argument("unknown method");
}

double sample_stddev(std::span<const double> xs, double mean) {
    if (xs.size() < 2) return 0.0;
    double acc = 0.0;
    for (double x : xs) acc += (x - mean) * (x - mean);
    return std::sqrt(acc / static_cast<double>(xs.size() - 1));
}

std::string format_double(double x, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
    return buf;
}

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::greedy: return "greedy";
        case Method::beam: return "beam";
        case Method::standard: return "standard";
        case Method::couture: return "couture";
        case Method::exact: return "exact";
    }
    return "?";
}

std::optional<Method> parse_method(std::string_view name) {
    for (Method m : {Method::greedy, Method::beam, Method::standard, Method::couture,
                     Method::exact})
        if (name == method_name(m)) return m;
    return std::nullopt;
}

TrialStats TrialStats::from_samples(std::vector<std::int64_t> sizes,
                                    std::vector<double> times_s) {
    if (sizes.empty() || sizes.size() != times_s.size())
        throw std::invalid_argument("size and time samples must be non-empty and aligned");
    TrialStats s;
    s.sizes = std::move(sizes);
    s.times_s = std::move(times_s);
    s.min_size = *std::min_element(s.sizes.begin(), s.sizes.end());
    std::vector<double> size_d(s.sizes.begin(), s.sizes.end());
    double sum = 0.0;
    for (double x : size_d) sum += x;
    s.mean_size = sum / static_cast<double>(size_d.size());
    s.stddev_size = sample_stddev(size_d, s.mean_size);
    double tsum = 0.0;
    for (double t : s.times_s) tsum += t;
    s.mean_time_s = tsum / static_cast<double>(s.times_s.size());
    s.stddev_time_s = sample_stddev(s.times_s, s.mean_time_s);
    s.degenerate_sample = s.sizes.size() == 1;
    return s;
}

TrialStats run_experiment(const Graph& g, const ExperimentPlan& plan) {
    return run_experiment(g, plan, solver_for(plan));
}

TrialStats run_experiment(const Graph& g, const ExperimentPlan& plan, const SolverFn& solver) {
    validate_plan(plan);

    auto run_trial = [&](std::uint64_t seed) -> std::pair<std::int64_t, double> {
        SolveConfig cfg;
        cfg.k = plan.k;
        cfg.seed = seed;
        cfg.beam_width = plan.beam_width.value_or(1);
        const auto start = std::chrono::steady_clock::now();
        std::vector<Vertex> members = solver(g, cfg);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        if (!is_k_dominating_set(g, plan.k, members))
            throw std::logic_error("solver returned an infeasible set (method " +
                                   std::string(method_name(plan.method)) + ", seed " +
                                   std::to_string(seed) + ")");
        const double t = plan.measure_time ? elapsed.count() : 0.0;
        return {static_cast<std::int64_t>(members.size()), t};
    };

    std::vector<std::int64_t> sizes(plan.seeds.size());
    std::vector<double> times(plan.seeds.size());
    if (plan.serial_timing) {
        for (std::size_t i = 0; i < plan.seeds.size(); ++i)
            std::tie(sizes[i], times[i]) = run_trial(plan.seeds[i]);
    } else {
        // Trials are independent; times under contention are suppressed.
        std::vector<std::future<std::pair<std::int64_t, double>>> futures;
        futures.reserve(plan.seeds.size());
        for (std::uint64_t seed : plan.seeds)
            futures.push_back(std::async(std::launch::async, run_trial, seed));
        for (std::size_t i = 0; i < futures.size(); ++i) {
            sizes[i] = futures[i].get().first;
            times[i] = 0.0;
        }
    }

    TrialStats stats = TrialStats::from_samples(std::move(sizes), std::move(times));
    stats.graph_name = plan.graph_name;
    stats.method = plan.method;
    stats.k = plan.k;
    stats.beam_width = plan.beam_width;
    return stats;
}

std::string emit_report(std::span<const TrialStats> stats, ReportFormat format) {
    if (stats.empty()) throw std::invalid_argument("nothing to report");

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"graph", "method", "k", "b", "n_seeds", "min", "mean", "stddev",
                    "mean_time_s", "stddev_time_s"});
    for (const TrialStats& s : stats) {
        rows.push_back({s.graph_name, method_name(s.method), std::to_string(s.k),
                        s.beam_width ? std::to_string(*s.beam_width) : "",
                        std::to_string(s.sizes.size()), std::to_string(s.min_size),
                        format_double(s.mean_size, 4), format_double(s.stddev_size, 4),
                        format_double(s.mean_time_s, 6), format_double(s.stddev_time_s, 6)});
    }

    std::string out;
    if (format == ReportFormat::csv) {
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out += ',';
                out += row[i];
            }
            out += '\n';
        }
        return out;
    }

    std::vector<std::size_t> widths(rows[0].size(), 0);
    for (auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i].empty()) row[i] = "-";
            widths[i] = std::max(widths[i], row[i].size());
        }
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += "  ";
            out += row[i];
            out.append(widths[i] - row[i].size(), ' ');
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += '\n';
    }
    bool any_degenerate = false;
    for (const TrialStats& s : stats) any_degenerate |= s.degenerate_sample;
    if (any_degenerate)
        out += "(single-seed rows: stddev 0.0 is a degenerate sample)\n";
    return out;
}

}  // namespace kdom
