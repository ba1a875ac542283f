#include "sgdlayout/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sgdlayout/bench.hpp"
#include "sgdlayout/svg.hpp"

namespace sgdlayout {

void write_coords(std::ostream& out, const Layout& layout) {
    static const char* names[] = {"x", "y", "z"};
    out << "vertex";
    for (int k = 0; k < layout.dim(); ++k) {
        if (k < 3) {
            out << ',' << names[k];
        } else {
            out << ",c" << k;
        }
    }
    out << '\n';
    char buf[32];
    for (VertexId v = 0; v < layout.size(); ++v) {
        out << v;
        for (int k = 0; k < layout.dim(); ++k) {
            std::snprintf(buf, sizeof(buf), "%.17g", layout.row(v)[k]);
            out << ',' << buf;
        }
        out << '\n';
    }
}

Layout read_coords(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("empty coordinate file");
    }
    std::vector<std::vector<double>> rows;
    int dim = -1;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<double> values;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            values.push_back(std::stod(cell));
        }
        if (values.size() < 3) {
            throw std::runtime_error("coordinate rows need a vertex id and at least 2 columns");
        }
        if (dim < 0) {
            dim = static_cast<int>(values.size()) - 1;
        } else if (static_cast<int>(values.size()) - 1 != dim) {
            throw std::runtime_error("inconsistent coordinate row width");
        }
        rows.push_back(std::move(values));
    }
    Layout layout(rows.size(), dim);
    for (const auto& row : rows) {
        const auto v = static_cast<VertexId>(row[0]);
        if (v >= layout.size()) {
            throw std::runtime_error("vertex id out of range in coordinate file");
        }
        for (int k = 0; k < dim; ++k) {
            layout.row(v)[k] = row[static_cast<std::size_t>(k) + 1];
        }
    }
    return layout;
}

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << content;
}

struct LayoutArgs {
    std::string input;
    std::string algo = "sgd";
    std::string schedule = "fixed";
    int iter = 0;
    double epsilon = 0.1;
    double delta = 0.03;
    std::size_t pivots = 200;
    std::uint64_t seed = 0;
    int dim = 2;
    bool use_largest_component = false;
    bool weighted_edges = false;
    bool no_trace = false;
    bool color_jaccard = false;
    std::int64_t focus = -1;
    std::string svg_path;
    std::string coords_path;
    std::string csv_path;
};

int run_layout(const LayoutArgs& a) {
    Graph g = load_graph(a.input, {a.weighted_edges});
    if (a.use_largest_component) {
        const auto extracted = largest_component(g);
        std::cout << "largest component: " << extracted.graph.num_vertices() << " of "
                  << g.num_vertices() << " vertices\n";
        g = extracted.graph;
    }

    const auto algo = parse_algo(a.algo);
    if (!algo) {
        throw std::runtime_error("unknown algorithm '" + a.algo + "'");
    }
    if (a.focus >= 0 && *algo != Algo::Sgd) {
        throw std::runtime_error("--focus is only supported with --algo sgd");
    }
    const ScheduleKind kind =
        a.schedule == "convergent" ? ScheduleKind::Convergent : ScheduleKind::Fixed;

    Layout layout;
    std::vector<IterationRecord> trace;
    int iterations = 0;
    if (*algo == Algo::Majorization) {
        MajorizeOptions opts;
        opts.seed = a.seed;
        opts.dim = a.dim;
        if (a.iter > 0) {
            opts.max_iter = a.iter;
        }
        MajorizeResult result = layout_majorization(g, opts);
        layout = std::move(result.layout);
        trace = std::move(result.trace);
        iterations = result.iterations;
    } else {
        SgdOptions opts;
        opts.schedule_kind = kind;
        if (a.iter > 0) {
            opts.t_max = a.iter;
        }
        opts.epsilon = a.epsilon;
        opts.delta = a.delta;
        opts.seed = a.seed;
        opts.dim = a.dim;
        opts.record_stress_trace = !a.no_trace;

        SgdResult result;
        if (*algo == Algo::SparseSgd) {
            result = layout_sparse_sgd(g, std::min(a.pivots, g.num_vertices()), opts);
        } else if (a.focus >= 0) {
            if (static_cast<std::size_t>(a.focus) >= g.num_vertices()) {
                throw std::runtime_error("focus vertex out of range");
            }
            const TermList terms =
                apply_focus(build_terms(all_pairs(g)), static_cast<VertexId>(a.focus));
            result = optimize_terms(g.num_vertices(), terms, opts);
        } else {
            result = layout_sgd(g, opts);
        }
        layout = std::move(result.layout);
        trace = std::move(result.trace);
        iterations = result.iterations;
    }

    std::printf("%s: n=%zu m=%zu algo=%s iterations=%d stress=%.17g\n", a.input.c_str(),
                g.num_vertices(), g.num_edges(), a.algo.c_str(), iterations,
                full_stress(g, layout));

    if (!a.csv_path.empty()) {
        std::vector<TraceRecord> rows;
        for (const IterationRecord& rec : trace) {
            rows.push_back({a.input, a.algo, 0, a.seed, rec.iteration, rec.elapsed_s, rec.stress,
                            rec.max_move});
        }
        std::ofstream out(a.csv_path);
        if (!out) {
            throw std::runtime_error("cannot write '" + a.csv_path + "'");
        }
        write_csv(out, rows);
    }
    if (!a.coords_path.empty()) {
        std::ofstream out(a.coords_path);
        if (!out) {
            throw std::runtime_error("cannot write '" + a.coords_path + "'");
        }
        write_coords(out, layout);
    }
    if (!a.svg_path.empty()) {
        if (a.color_jaccard) {
            SgdOptions color_opts;
            color_opts.seed = a.seed;
            const ColorEmbedding colors = embed_rgb(g, color_opts);
            write_file(a.svg_path, emit_svg(layout, g, &colors));
        } else {
            write_file(a.svg_path, emit_svg(layout, g));
        }
    }
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
    CLI::App app{"stress-based graph layout by stochastic gradient descent"};
    app.require_subcommand(1);

    // --- layout ---
    LayoutArgs la;
    CLI::App* layout_cmd = app.add_subcommand("layout", "lay out one graph");
    layout_cmd->add_option("input", la.input, "Matrix Market file")->required();
    layout_cmd->add_option("--algo", la.algo, "sgd | sparse-sgd | majorization");
    layout_cmd->add_option("--schedule", la.schedule, "fixed | convergent");
    layout_cmd->add_option("--iter", la.iter, "iteration budget");
    layout_cmd->add_option("--epsilon", la.epsilon, "final-mu target of the schedule");
    layout_cmd->add_option("--delta", la.delta, "convergent stopping threshold");
    layout_cmd->add_option("--pivots", la.pivots, "pivot count for sparse-sgd");
    layout_cmd->add_option("--seed", la.seed, "random seed");
    layout_cmd->add_option("--dim", la.dim, "layout dimension");
    layout_cmd->add_option("--focus", la.focus, "pin all distances to this vertex");
    layout_cmd->add_flag("--largest-component", la.use_largest_component,
                         "extract the largest component instead of rejecting disconnected input");
    layout_cmd->add_flag("--weighted-edges", la.weighted_edges,
                         "use matrix values as edge lengths");
    layout_cmd->add_flag("--no-trace", la.no_trace, "skip per-iteration stress evaluation");
    layout_cmd->add_flag("--color-jaccard", la.color_jaccard,
                         "color vertices by a Jaccard-similarity RGB embedding");
    layout_cmd->add_option("--svg", la.svg_path, "write an SVG rendering");
    layout_cmd->add_option("--coords", la.coords_path, "write final coordinates as CSV");
    layout_cmd->add_option("--csv", la.csv_path, "write the per-iteration trace as CSV");

    // --- bench ---
    RunConfig bc;
    std::string bench_algos = "sgd";
    std::string bench_schedule = "fixed";
    std::string bench_csv;
    int bench_iter = 0;
    CLI::App* bench_cmd = app.add_subcommand("bench", "batch benchmark over graphs and seeds");
    bench_cmd->add_option("inputs", bc.inputs, "Matrix Market files")->required();
    bench_cmd->add_option("--algo", bench_algos, "comma-separated: sgd,sparse-sgd,majorization");
    bench_cmd->add_option("--schedule", bench_schedule, "fixed | convergent");
    bench_cmd->add_option("--iter", bench_iter, "iteration budget");
    bench_cmd->add_option("--epsilon", bc.epsilon, "final-mu target");
    bench_cmd->add_option("--delta", bc.delta, "convergent stopping threshold");
    bench_cmd->add_option("--pivots", bc.pivots, "pivot count for sparse-sgd");
    bench_cmd->add_option("--runs", bc.runs, "runs per (graph, algorithm)");
    bench_cmd->add_option("--seed", bc.base_seed, "base seed; run r uses base + r");
    bench_cmd->add_option("--threads", bc.threads, "parallel runs (results are unchanged)");
    bench_cmd->add_option("--majorize-tol", bc.majorize_rel_tol,
                          "relative stress decrease stopping majorization");
    bench_cmd->add_option("--majorize-max-iter", bc.majorize_max_iter,
                          "majorization iteration cap");
    bench_cmd->add_flag("--largest-component", bc.use_largest_component,
                        "extract largest components");
    bench_cmd->add_flag("--weighted-edges", bc.weighted_edges, "matrix values as edge lengths");
    bench_cmd->add_flag("--no-trace", bc.no_trace, "skip per-iteration stress evaluation");
    bench_cmd->add_flag("--normalize", bc.normalize,
                        "report stress relative to the best run on each graph");
    bench_cmd->add_flag("--include-preprocessing", bc.include_preprocess_time,
                        "fold shortest-path setup into reported times");
    bench_cmd->add_option("--csv", bench_csv, "write the combined trace CSV here");

    // --- render ---
    std::string render_input, render_coords, render_svg = "out.svg";
    bool render_color = false, render_largest = false, render_weighted = false;
    CLI::App* render_cmd = app.add_subcommand("render", "render saved coordinates as SVG");
    render_cmd->add_option("input", render_input, "Matrix Market file")->required();
    render_cmd->add_option("coords", render_coords, "coordinate CSV from `layout --coords`")
        ->required();
    render_cmd->add_option("--svg", render_svg, "output path");
    render_cmd->add_flag("--color-jaccard", render_color, "Jaccard RGB vertex colors");
    render_cmd->add_flag("--largest-component", render_largest, "extract the largest component");
    render_cmd->add_flag("--weighted-edges", render_weighted, "matrix values as edge lengths");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (layout_cmd->parsed()) {
            return run_layout(la);
        }
        if (bench_cmd->parsed()) {
            std::stringstream names(bench_algos);
            std::string name;
            bc.algos.clear();
            while (std::getline(names, name, ',')) {
                const auto algo = parse_algo(name);
                if (!algo) {
                    throw std::runtime_error("unknown algorithm '" + name + "'");
                }
                bc.algos.push_back(*algo);
            }
            if (bc.algos.empty()) {
                throw std::runtime_error("--algo needs at least one algorithm");
            }
            bc.schedule = bench_schedule == "convergent" ? ScheduleKind::Convergent
                                                         : ScheduleKind::Fixed;
            if (bench_iter > 0) {
                bc.t_max = bench_iter;
            }
            const BenchReport report = run_benchmark(bc);
            if (!bench_csv.empty()) {
                std::ofstream out(bench_csv);
                if (!out) {
                    throw std::runtime_error("cannot write '" + bench_csv + "'");
                }
                write_csv(out, report.rows);
            } else {
                write_csv(std::cout, report.rows);
            }
            write_summary(std::cout, report);
            bool any_error = false;
            for (const GraphSummary& s : report.summaries) {
                any_error = any_error || !s.error.empty();
            }
            return any_error ? 1 : 0;
        }
        if (render_cmd->parsed()) {
            Graph g = load_graph(render_input, {render_weighted});
            if (render_largest) {
                g = largest_component(g).graph;
            }
            std::ifstream in(render_coords);
            if (!in) {
                throw std::runtime_error("cannot open '" + render_coords + "'");
            }
            const Layout layout = read_coords(in);
            if (layout.size() != g.num_vertices()) {
                throw std::runtime_error("coordinate file does not match the graph size");
            }
            if (render_color) {
                const ColorEmbedding colors = embed_rgb(g);
                write_file(render_svg, emit_svg(layout, g, &colors));
            } else {
                write_file(render_svg, emit_svg(layout, g));
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace sgdlayout
