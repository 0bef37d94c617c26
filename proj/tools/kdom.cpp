// kdom: compute and benchmark small k-dominating sets.
//
// Subcommands:
//   reach   build a reachability graph from a weighted street edge list
//   solve   run one heuristic on an edge list and print the set found
//   bench   run the multi-seed experiment protocol and report statistics
//   exact   exact minimum k-dominating set for small instances
//   verify  check whether a given vertex set is k-dominating
//
// Exit codes: 0 success/feasible, 1 infeasible (verify), 2 usage or I/O
// error, 3 internal solver error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kdom/baselines.hpp"
#include "kdom/bench.hpp"
#include "kdom/coverage.hpp"
#include "kdom/edge_list_io.hpp"
#include "kdom/exact.hpp"
#include "kdom/reachability.hpp"
#include "kdom/rng.hpp"
#include "kdom/solvers.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSolverBug = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t parse_seed(const std::string& text) {
    if (text == "random") return std::random_device{}();
    try {
        std::size_t pos = 0;
        const std::uint64_t value = std::stoull(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw UsageError("--seed expects an unsigned integer or 'random', got '" + text + "'");
    }
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream stream(text);
    while (std::getline(stream, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string joined_labels(const kdom::Graph& g, std::vector<kdom::Vertex> members) {
    std::vector<std::string> labels;
    labels.reserve(members.size());
    for (kdom::Vertex v : members) labels.push_back(g.label(v));
    std::sort(labels.begin(), labels.end());
    std::string out;
    for (const std::string& l : labels) {
        if (!out.empty()) out += ' ';
        out += l;
    }
    return out;
}

int run_reach(const std::string& input, double threshold, const std::string& output) {
    kdom::StreetNetwork net = kdom::load_street_network_file(input);
    kdom::Graph reach = kdom::build_reachability(net, {threshold});
    kdom::write_edge_list_file(reach, output);
    std::cout << reach.vertex_count() << " vertices, " << reach.edge_count() << " edges\n";
    return kExitOk;
}

int run_solve(const std::string& input, int k, const std::string& method_name,
              std::optional<int> beam_width, const std::string& seed_text) {
    auto method = kdom::parse_method(method_name);
    if (!method || *method == kdom::Method::exact)
        throw UsageError("--method must be one of greedy|beam|standard|couture");
    const bool is_beam = *method == kdom::Method::beam;
    if (beam_width && !is_beam)
        throw UsageError("--beam-width only applies to --method beam");
    if (is_beam && !beam_width)
        throw UsageError("--method beam requires --beam-width");

    kdom::Graph g = kdom::load_graph_file(input);
    kdom::SolveConfig cfg;
    cfg.k = k;
    cfg.seed = parse_seed(seed_text);
    cfg.beam_width = beam_width.value_or(1);

    std::vector<kdom::Vertex> members;
    switch (*method) {
        case kdom::Method::greedy: members = kdom::greedy_k_domination(g, cfg); break;
        case kdom::Method::beam: members = kdom::beam_k_domination(g, cfg); break;
        case kdom::Method::standard: members = kdom::standard_greedy(g, cfg); break;
        case kdom::Method::couture: members = kdom::couture_k_domination(g, cfg); break;
        case kdom::Method::exact: break;  // rejected above
    }
    if (!kdom::is_k_dominating_set(g, k, members))
        throw std::logic_error("internal error: produced set fails verification");
    std::cout << "size " << members.size() << ": " << joined_labels(g, std::move(members))
              << "\n";
    return kExitOk;
}

int run_bench(const std::string& input, int k, const std::string& methods_text,
              const std::string& widths_text, int n_seeds, const std::string& master_seed_text,
              const std::string& format_text, bool serial_timing) {
    if (n_seeds < 1) throw UsageError("--n-seeds must be >= 1");
    kdom::ReportFormat format;
    if (format_text == "csv") {
        format = kdom::ReportFormat::csv;
    } else if (format_text == "table") {
        format = kdom::ReportFormat::table;
    } else {
        throw UsageError("--format must be csv or table");
    }

    std::vector<int> widths;
    for (const std::string& w : split_csv(widths_text)) {
        try {
            widths.push_back(std::stoi(w));
        } catch (const std::exception&) {
            throw UsageError("--beam-widths expects integers, got '" + w + "'");
        }
        if (widths.back() < 1) throw UsageError("beam widths must be >= 1");
    }

    std::vector<std::pair<kdom::Method, std::optional<int>>> runs;
    for (const std::string& name : split_csv(methods_text)) {
        auto method = kdom::parse_method(name);
        if (!method) throw UsageError("unknown method '" + name + "'");
        if (*method == kdom::Method::beam) {
            if (widths.empty()) throw UsageError("--methods beam requires --beam-widths");
            for (int b : widths) runs.emplace_back(*method, b);
        } else {
            runs.emplace_back(*method, std::nullopt);
        }
    }
    if (runs.empty()) throw UsageError("--methods must list at least one method");

    kdom::Graph g = kdom::load_graph_file(input);
    const std::uint64_t master = parse_seed(master_seed_text);
    const auto seeds = kdom::derive_seeds(master, static_cast<std::size_t>(n_seeds));

    std::vector<kdom::TrialStats> stats;
    for (const auto& [method, width] : runs) {
        kdom::ExperimentPlan plan;
        plan.graph_name = input;
        plan.method = method;
        plan.k = k;
        plan.beam_width = width;
        plan.seeds = seeds;
        plan.serial_timing = serial_timing;
        stats.push_back(kdom::run_experiment(g, plan));
    }
    std::cout << kdom::emit_report(stats, format);
    return kExitOk;
}

int run_exact(const std::string& input, int k, std::uint64_t node_budget) {
    kdom::Graph g = kdom::load_graph_file(input);
    kdom::ExactResult result = kdom::exact_min_k_dominating(g, k, node_budget);
    if (!result.solved) {
        std::cout << "unknown (budget exhausted)\n";
        return kExitOk;
    }
    std::cout << "optimum " << result.optimum_size << ": "
              << joined_labels(g, std::move(result.witness)) << "\n";
    return kExitOk;
}

int run_verify(const std::string& input, int k, const std::string& set_text) {
    kdom::Graph g = kdom::load_graph_file(input);
    std::vector<kdom::Vertex> members;
    for (const std::string& label : split_csv(set_text)) {
        auto v = g.index_of(label);
        if (!v) throw UsageError("unknown vertex label '" + label + "'");
        if (std::find(members.begin(), members.end(), *v) != members.end())
            throw UsageError("duplicate vertex label '" + label + "'");
        members.push_back(*v);
    }
    auto violations = kdom::domination_violations(g, k, members);
    if (violations.empty()) {
        std::cout << "FEASIBLE\n";
        return kExitOk;
    }
    std::vector<std::pair<std::string, int>> named;
    named.reserve(violations.size());
    for (const auto& [v, cov] : violations) named.emplace_back(g.label(v), cov);
    std::sort(named.begin(), named.end());
    std::cout << "INFEASIBLE\n";
    for (const auto& [label, cov] : named) std::cout << label << " cov=" << cov << "\n";
    return kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"small k-dominating sets in graphs and street networks"};
    app.require_subcommand(1);

    // reach
    auto* reach = app.add_subcommand("reach", "build a reachability graph");
    std::string reach_input, reach_output;
    double threshold = 0.0;
    reach->add_option("--input", reach_input, "weighted edge list (u v meters)")->required();
    reach->add_option("--threshold", threshold, "reachability threshold in meters")
        ->required()
        ->check(CLI::PositiveNumber);
    reach->add_option("--output", reach_output, "output edge list path")->required();

    // solve
    auto* solve = app.add_subcommand("solve", "run one heuristic once");
    std::string solve_input, solve_method, solve_seed = std::to_string(kdom::kDefaultSeed);
    int solve_k = 1;
    std::optional<int> solve_width;
    solve->add_option("--input", solve_input, "edge list")->required();
    solve->add_option("--k", solve_k, "domination parameter k")
        ->required()
        ->check(CLI::PositiveNumber);
    solve->add_option("--method", solve_method, "greedy|beam|standard|couture")->required();
    solve->add_option("--beam-width", solve_width, "beam width (beam method only)")
        ->check(CLI::PositiveNumber);
    solve->add_option("--seed", solve_seed, "RNG seed (u64) or 'random'");

    // bench
    auto* bench = app.add_subcommand("bench", "multi-seed experiment statistics");
    std::string bench_input, bench_methods, bench_widths;
    std::string bench_master = std::to_string(kdom::kDefaultSeed), bench_format = "csv";
    int bench_k = 1, bench_seeds = 10;
    bool bench_serial = false;
    bench->add_option("--input", bench_input, "edge list")->required();
    bench->add_option("--k", bench_k, "domination parameter k")
        ->required()
        ->check(CLI::PositiveNumber);
    bench->add_option("--methods", bench_methods, "comma list: greedy,beam,standard,couture,exact")
        ->required();
    bench->add_option("--beam-widths", bench_widths, "comma list of widths for beam");
    bench->add_option("--n-seeds", bench_seeds, "trials per method")->capture_default_str();
    bench->add_option("--master-seed", bench_master, "seed the per-trial seeds derive from");
    bench->add_option("--format", bench_format, "csv|table")->capture_default_str();
    bench->add_flag("--serial-timing", bench_serial,
                    "run trials serially so wall times are uncontended");

    // exact
    auto* exact = app.add_subcommand("exact", "exact minimum k-dominating set");
    std::string exact_input;
    int exact_k = 1;
    std::uint64_t exact_budget = kdom::kDefaultExactNodeBudget;
    exact->add_option("--input", exact_input, "edge list")->required();
    exact->add_option("--k", exact_k, "domination parameter k")
        ->required()
        ->check(CLI::PositiveNumber);
    exact->add_option("--node-budget", exact_budget, "search node limit")->capture_default_str();

    // verify
    auto* verify = app.add_subcommand("verify", "check a set for k-domination");
    std::string verify_input, verify_set;
    int verify_k = 1;
    verify->add_option("--input", verify_input, "edge list")->required();
    verify->add_option("--k", verify_k, "domination parameter k")
        ->required()
        ->check(CLI::PositiveNumber);
    verify->add_option("--set", verify_set, "comma-separated vertex labels")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (reach->parsed()) return run_reach(reach_input, threshold, reach_output);
        if (solve->parsed())
            return run_solve(solve_input, solve_k, solve_method, solve_width, solve_seed);
        if (bench->parsed())
            return run_bench(bench_input, bench_k, bench_methods, bench_widths, bench_seeds,
                             bench_master, bench_format, bench_serial);
        if (exact->parsed()) return run_exact(exact_input, exact_k, exact_budget);
        if (verify->parsed()) return run_verify(verify_input, verify_k, verify_set);
        throw UsageError("no subcommand given");
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitSolverBug;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
