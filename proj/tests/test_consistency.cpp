// Statistical comparison of SGD against the majorization baseline on a small
// synthetic corpus: the same machinery the acceptance suite applies to the
// SuiteSparse desk corpus, exercised here on generated graphs so it always
// runs. Spread is compared between converged runs (convergent schedule vs
// majorization's own stopping rule); the near-best check uses the
// 15-iteration schedule.

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "sgdlayout/majorization.hpp"
#include "sgdlayout/sgd.hpp"
#include "test_util.hpp"

using namespace sgdlayout;
using namespace testutil;

namespace {

struct Stats {
    double mean = 0.0;
    double cv = 0.0;  // coefficient of variation
    double min = 0.0;
};

Stats stats_of(const std::vector<double>& values) {
    Stats s;
    for (double v : values) {
        s.mean += v;
    }
    s.mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) {
        var += (v - s.mean) * (v - s.mean);
    }
    var /= static_cast<double>(values.size() - 1);
    s.cv = std::sqrt(var) / s.mean;
    s.min = *std::min_element(values.begin(), values.end());
    return s;
}

// Grid with the column dimension wrapped; long tubes twist, which traps
// majorization in local minima the way long meshes in the wild do.
Graph cylinder_graph(std::size_t rows, std::size_t cols) {
    std::vector<Edge> edges;
    const auto id = [cols](std::size_t r, std::size_t c) {
        return static_cast<VertexId>(r * cols + c);
    };
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            edges.push_back({id(r, c), id(r, (c + 1) % cols)});
            if (r + 1 < rows) {
                edges.push_back({id(r, c), id(r + 1, c)});
            }
        }
    }
    return Graph::from_edges(rows * cols, std::move(edges));
}

}  // namespace

TEST_SUITE_BEGIN("consistency");

TEST_CASE("sgd is more consistent than majorization on a synthetic corpus") {
    const std::vector<Graph> corpus = {
        grid_graph(6, 30),            // long strip, prone to twisting
        cylinder_graph(4, 24),        // tube
        binary_tree(6),               // 127 vertices of branching
        random_connected(150, 100, 3),
        barbell_graph(12, 8),         // dense anchors, easy for majorization
        cylinder_graph(6, 20),
    };
    const int seeds = 12;

    int sgd_no_worse_cv = 0;
    int sgd_near_best = 0;
    double sgd_iter_mean = 0.0;
    double maj_iter_mean = 0.0;

    for (const Graph& g : corpus) {
        std::vector<double> sgd_fixed, sgd_conv, maj_final;
        for (int s = 0; s < seeds; ++s) {
            SgdOptions fixed_opts;
            fixed_opts.seed = static_cast<std::uint64_t>(s);
            fixed_opts.record_stress_trace = false;
            sgd_fixed.push_back(full_stress(g, layout_sgd(g, fixed_opts).layout));

            SgdOptions conv_opts = fixed_opts;
            conv_opts.schedule_kind = ScheduleKind::Convergent;
            const SgdResult conv_run = layout_sgd(g, conv_opts);
            sgd_conv.push_back(full_stress(g, conv_run.layout));
            sgd_iter_mean += conv_run.iterations;

            MajorizeOptions maj_opts;
            maj_opts.seed = static_cast<std::uint64_t>(s);
            const MajorizeResult maj_run = layout_majorization(g, maj_opts);
            maj_final.push_back(full_stress(g, maj_run.layout));
            maj_iter_mean += maj_run.iterations;
        }

        const Stats conv = stats_of(sgd_conv);
        const Stats fixed = stats_of(sgd_fixed);
        const Stats maj = stats_of(maj_final);
        if (conv.cv <= maj.cv + 1e-12) {
            ++sgd_no_worse_cv;
        }
        const double best = std::min({conv.min, fixed.min, maj.min});
        if (fixed.mean <= 1.05 * best) {
            ++sgd_near_best;
        }
    }

    // The consistency claims at synthetic-corpus scale. The barbell, with
    // its dense anchoring cliques, is the one graph here where majorization
    // comes out more consistent.
    CHECK(sgd_no_worse_cv * 10 >= static_cast<int>(corpus.size()) * 8);
    CHECK(sgd_near_best * 10 >= static_cast<int>(corpus.size()) * 9);

    // Convergent SGD needs fewer iterations than majorization on average.
    sgd_iter_mean /= static_cast<double>(corpus.size() * seeds);
    maj_iter_mean /= static_cast<double>(corpus.size() * seeds);
    CHECK(sgd_iter_mean < maj_iter_mean);
}

TEST_SUITE_END();
