#include "sgdlayout/bench.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <ostream>
#include <thread>

namespace sgdlayout {

std::string algo_name(Algo a) {
    switch (a) {
        case Algo::Sgd:
            return "sgd";
        case Algo::SparseSgd:
            return "sparse-sgd";
        case Algo::Majorization:
            return "majorization";
    }
    return "?";
}

std::optional<Algo> parse_algo(const std::string& name) {
    if (name == "sgd") {
        return Algo::Sgd;
    }
    if (name == "sparse-sgd" || name == "sparse") {
        return Algo::SparseSgd;
    }
    if (name == "majorization" || name == "major") {
        return Algo::Majorization;
    }
    return std::nullopt;
}

namespace {

struct RunOutput {
    std::vector<IterationRecord> trace;
    double preprocess_s = 0.0;
    double final_stress = 0.0;
    int iterations = 0;
};

double final_full_stress(const Graph& g, const Layout& layout, std::uint64_t seed) {
    if (g.num_vertices() <= 5000) {
        return full_stress(g, layout);
    }
    Rng rng = make_stream(seed, RngStream::Probe);
    return sampled_full_stress(g, layout, 1'000'000, rng).estimate;
}

RunOutput execute_run(const Graph& g, Algo algo, const RunConfig& config, std::uint64_t seed) {
    RunOutput out;
    if (algo == Algo::Majorization) {
        MajorizeOptions opts;
        opts.rel_tol = config.majorize_rel_tol;
        opts.max_iter = config.majorize_max_iter;
        opts.seed = seed;
        opts.dim = config.dim;
        MajorizeResult result = layout_majorization(g, opts);
        out.trace = std::move(result.trace);
        out.preprocess_s = result.preprocess_s;
        out.iterations = result.iterations;
        out.final_stress = final_full_stress(g, result.layout, seed);
        return out;
    }

    SgdOptions opts;
    opts.schedule_kind = config.schedule;
    opts.t_max = config.t_max;
    opts.epsilon = config.epsilon;
    opts.delta = config.delta;
    opts.convergence_cap = config.convergence_cap;
    opts.seed = seed;
    opts.dim = config.dim;
    opts.record_stress_trace = !config.no_trace;

    SgdResult result = algo == Algo::Sgd
                           ? layout_sgd(g, opts)
                           : layout_sparse_sgd(g, std::min(config.pivots, g.num_vertices()), opts);
    out.trace = std::move(result.trace);
    out.preprocess_s = result.preprocess_s;
    out.iterations = result.iterations;
    out.final_stress = final_full_stress(g, result.layout, seed);
    return out;
}

std::string graph_label(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

}  // namespace

BenchReport run_benchmark(const RunConfig& config) {
    if (config.runs < 1) {
        throw std::invalid_argument("runs must be at least 1");
    }

    BenchReport report;

    struct LoadedGraph {
        std::string label;
        Graph graph;
    };
    std::vector<LoadedGraph> graphs;
    for (const std::string& path : config.inputs) {
        const std::string label = graph_label(path);
        try {
            Graph g = load_graph(path, {config.weighted_edges});
            if (config.use_largest_component) {
                g = largest_component(g).graph;
            } else if (const std::size_t c = component_count(g); c != 1) {
                throw DisconnectedError(c);
            }
            graphs.push_back({label, std::move(g)});
        } catch (const std::exception& e) {
            GraphSummary error_row;
            error_row.graph = label;
            error_row.error = e.what();
            report.summaries.push_back(error_row);
        }
    }

    struct Job {
        std::size_t graph_idx;
        Algo algo;
        int run;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        for (Algo algo : config.algos) {
            for (int r = 0; r < config.runs; ++r) {
                jobs.push_back({gi, algo, r, config.base_seed + static_cast<std::uint64_t>(r)});
            }
        }
    }

    std::vector<RunOutput> outputs(jobs.size());
    const int threads = std::max(1, config.threads);
    if (threads == 1 || jobs.size() <= 1) {
        for (std::size_t k = 0; k < jobs.size(); ++k) {
            outputs[k] = execute_run(graphs[jobs[k].graph_idx].graph, jobs[k].algo, config,
                                     jobs[k].seed);
        }
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::size_t k = next.fetch_add(1);
                if (k >= jobs.size()) {
                    return;
                }
                outputs[k] = execute_run(graphs[jobs[k].graph_idx].graph, jobs[k].algo, config,
                                         jobs[k].seed);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }

    // Rows in deterministic (graph, algo, run) order regardless of execution.
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        const Job& job = jobs[k];
        const RunOutput& out = outputs[k];
        const double offset = config.include_preprocess_time ? out.preprocess_s : 0.0;
        for (const IterationRecord& rec : out.trace) {
            TraceRecord row;
            row.graph = graphs[job.graph_idx].label;
            row.algo = algo_name(job.algo);
            row.run = job.run;
            row.seed = job.seed;
            row.iteration = rec.iteration;
            row.time_s = rec.elapsed_s + offset;
            row.stress = rec.stress;
            row.max_move = rec.max_move;
            report.rows.push_back(row);
        }
    }

    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        double best = std::numeric_limits<double>::infinity();
        if (config.normalize) {
            for (std::size_t k = 0; k < jobs.size(); ++k) {
                if (jobs[k].graph_idx == gi) {
                    best = std::min(best, outputs[k].final_stress);
                }
            }
        }
        for (Algo algo : config.algos) {
            GraphSummary s;
            s.graph = graphs[gi].label;
            s.algo = algo_name(algo);
            s.min_final_stress = std::numeric_limits<double>::infinity();
            s.max_final_stress = 0.0;
            for (std::size_t k = 0; k < jobs.size(); ++k) {
                if (jobs[k].graph_idx != gi || jobs[k].algo != algo) {
                    continue;
                }
                const RunOutput& out = outputs[k];
                ++s.runs;
                s.mean_final_stress += out.final_stress;
                s.min_final_stress = std::min(s.min_final_stress, out.final_stress);
                s.max_final_stress = std::max(s.max_final_stress, out.final_stress);
                s.mean_iterations += out.iterations;
                const double offset = config.include_preprocess_time ? out.preprocess_s : 0.0;
                s.mean_wall_s += (out.trace.empty() ? 0.0 : out.trace.back().elapsed_s) + offset;
            }
            if (s.runs > 0) {
                s.mean_final_stress /= s.runs;
                s.mean_iterations /= s.runs;
                s.mean_wall_s /= s.runs;
            }
            if (config.normalize && best > 0.0 && std::isfinite(best)) {
                s.mean_final_stress /= best;
                s.min_final_stress /= best;
                s.max_final_stress /= best;
            }
            report.summaries.push_back(s);
        }
    }
    return report;
}

void write_csv(std::ostream& out, const std::vector<TraceRecord>& rows) {
    out << "graph,algo,run,seed,iteration,time_s,stress,max_move\n";
    char buf[128];
    for (const TraceRecord& row : rows) {
        std::snprintf(buf, sizeof(buf), "%.6f,%.17g,%.17g", row.time_s, row.stress, row.max_move);
        out << row.graph << ',' << row.algo << ',' << row.run << ',' << row.seed << ','
            << row.iteration << ',' << buf << '\n';
    }
}

void write_summary(std::ostream& out, const BenchReport& report) {
    char buf[256];
    for (const GraphSummary& s : report.summaries) {
        if (!s.error.empty()) {
            out << s.graph << ": error: " << s.error << '\n';
            continue;
        }
        std::snprintf(buf, sizeof(buf),
                      "%s %s: runs=%d stress mean=%.6g min=%.6g max=%.6g iters=%.1f wall=%.3fs",
                      s.graph.c_str(), s.algo.c_str(), s.runs, s.mean_final_stress,
                      s.min_final_stress, s.max_final_stress, s.mean_iterations, s.mean_wall_s);
        out << buf << '\n';
    }
}

}  // namespace sgdlayout
