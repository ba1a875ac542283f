// bench.hpp - batch benchmark runner: repeated layout runs across graphs and
// algorithms, per-iteration trace rows, and per-graph summary statistics.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sgdlayout/majorization.hpp"
#include "sgdlayout/sgd.hpp"
#include "sgdlayout/sparse.hpp"

namespace sgdlayout {

enum class Algo { Sgd, SparseSgd, Majorization };

std::string algo_name(Algo a);
std::optional<Algo> parse_algo(const std::string& name);

struct RunConfig {
    std::vector<std::string> inputs;
    std::vector<Algo> algos = {Algo::Sgd};
    ScheduleKind schedule = ScheduleKind::Fixed;
    std::optional<int> t_max;
    double epsilon = 0.1;
    double delta = 0.03;
    int convergence_cap = 1000;
    std::size_t pivots = 200;
    double majorize_rel_tol = 1e-5;
    int majorize_max_iter = 1000;
    int runs = 1;
    std::uint64_t base_seed = 0;  // run r uses seed base_seed + r
    int dim = 2;
    bool use_largest_component = false;
    bool weighted_edges = false;
    bool no_trace = false;                // skip per-iteration stress evaluation
    bool normalize = false;               // divide summary stress by the best run on that graph
    bool include_preprocess_time = false; // fold shortest-path setup into time_s
    int threads = 1;
};

// One CSV row. Column order is part of the format:
// graph,algo,run,seed,iteration,time_s,stress,max_move
struct TraceRecord {
    std::string graph;
    std::string algo;
    int run = 0;
    std::uint64_t seed = 0;
    int iteration = 0;
    double time_s = 0.0;
    double stress = 0.0;
    double max_move = 0.0;
};

struct GraphSummary {
    std::string graph;
    std::string algo;
    int runs = 0;
    double mean_final_stress = 0.0;
    double min_final_stress = 0.0;
    double max_final_stress = 0.0;
    double mean_iterations = 0.0;
    double mean_wall_s = 0.0;
    std::string error;  // non-empty when the graph could not be processed
};

struct BenchReport {
    std::vector<TraceRecord> rows;
    std::vector<GraphSummary> summaries;
};

// Executes runs x algos x graphs. Failures (unreadable file, disconnected
// graph without the largest-component flag) become an error summary row and
// the batch continues. With threads > 1 runs execute concurrently; stress
// results are identical to a sequential batch.
BenchReport run_benchmark(const RunConfig& config);

void write_csv(std::ostream& out, const std::vector<TraceRecord>& rows);
void write_summary(std::ostream& out, const BenchReport& report);

}  // namespace sgdlayout
