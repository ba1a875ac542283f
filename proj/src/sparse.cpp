#include "sgdlayout/sparse.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace sgdlayout {

namespace {

constexpr std::uint32_t kNoPivot = 0xffffffffu;

double pair_weight(double d) { return 1.0 / (d * d); }

}  // namespace

double PivotModel::objective(const Layout& layout) const {
    double total = 0.0;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const Term& term = terms[t];
        const double diff = layout.distance(term.i, term.j) - term.d;
        const double w = t < edge_term_count ? term.w_ij : term.w_ij + term.w_ji;
        total += w * diff * diff;
    }
    return total;
}

PivotSelection select_pivots_maxmin_random(const Graph& g, std::size_t h, Rng& rng) {
    const std::size_t n = g.num_vertices();
    if (h < 1 || h > n) {
        throw std::invalid_argument("pivot count must be between 1 and the vertex count");
    }
    if (const std::size_t c = component_count(g); c != 1) {
        throw DisconnectedError(c);
    }
    const bool weighted = !g.has_unit_lengths();

    PivotSelection sel;
    sel.pivots.reserve(h);
    sel.min_dist.assign(n, std::numeric_limits<double>::infinity());

    VertexId pivot = static_cast<VertexId>(rng.next_below(n));
    for (;;) {
        sel.pivots.push_back(pivot);
        const DistanceResult row = sssp(g, pivot, weighted);
        for (std::size_t v = 0; v < n; ++v) {
            sel.min_dist[v] = std::min(sel.min_dist[v], row.dist[v]);
        }
        if (sel.pivots.size() == h) {
            break;
        }

        // Sample the next pivot with probability proportional to its distance
        // from the chosen set; chosen pivots sit at distance 0.
        double total = 0.0;
        for (double d : sel.min_dist) {
            total += d;
        }
        const double u = rng.next_double() * total;
        double acc = 0.0;
        VertexId next = kNoPivot;
        for (std::size_t v = 0; v < n; ++v) {
            acc += sel.min_dist[v];
            if (u < acc) {
                next = static_cast<VertexId>(v);
                break;
            }
        }
        if (next == kNoPivot) {  // u == total from rounding: take the last positive mass
            for (std::size_t v = n; v-- > 0;) {
                if (sel.min_dist[v] > 0.0) {
                    next = static_cast<VertexId>(v);
                    break;
                }
            }
        }
        pivot = next;
    }
    return sel;
}

PivotModel build_pivot_model(const Graph& g, const std::vector<VertexId>& pivots) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = g.num_vertices();
    const std::size_t h = pivots.size();
    if (h == 0) {
        throw std::invalid_argument("pivot list is empty");
    }
    if (const std::size_t c = component_count(g); c != 1) {
        throw DisconnectedError(c);  // regions must cover every vertex
    }
    const bool weighted = !g.has_unit_lengths();

    std::vector<std::uint32_t> pivot_index(n, kNoPivot);
    for (std::size_t a = 0; a < h; ++a) {
        if (pivots[a] >= n) {
            throw GraphError("pivot id out of range");
        }
        if (pivot_index[pivots[a]] != kNoPivot) {
            throw std::invalid_argument("duplicate pivot");
        }
        pivot_index[pivots[a]] = static_cast<std::uint32_t>(a);
    }

    PivotModel model;
    model.pivots = pivots;

    // First pass: assign every vertex to its nearest pivot, distance ties
    // going to the earlier-selected one.
    std::vector<double> best_dist(n, std::numeric_limits<double>::infinity());
    model.region.assign(n, kNoPivot);
    for (std::size_t a = 0; a < h; ++a) {
        const DistanceResult row = sssp(g, pivots[a], weighted);
        for (std::size_t v = 0; v < n; ++v) {
            if (row.dist[v] < best_dist[v]) {
                best_dist[v] = row.dist[v];
                model.region[v] = pivots[a];
            }
        }
    }

    // Edge terms keep their symmetric original weights.
    for (const Edge& e : g.edges()) {
        const double w = pair_weight(e.len);
        model.terms.push_back({e.u, e.v, e.len, w, w});
    }
    model.edge_term_count = model.terms.size();

    // Second pass: per pivot, shrink counts for every vertex via a sweep in
    // settle order (both the query distances d_ip/2 and the region member
    // distances arrive nondecreasing), then the (i, p) terms.
    std::vector<std::vector<double>> pivot_pair_w(h, std::vector<double>(h, 0.0));
    std::vector<std::vector<double>> pivot_pair_d(h, std::vector<double>(h, 0.0));
    std::vector<VertexId> settle_order;
    std::vector<double> region_dists;
    std::vector<bool> adjacent(n, false);
    for (std::size_t a = 0; a < h; ++a) {
        const VertexId p = pivots[a];
        const DistanceResult row = sssp(g, p, weighted, settle_order);

        region_dists.clear();
        for (VertexId v : settle_order) {
            if (model.region[v] == p) {
                region_dists.push_back(row.dist[v]);
            }
        }

        for (const Neighbor& nb : g.neighbors(p)) {
            adjacent[nb.to] = true;
        }

        std::size_t shrink = 0;
        for (VertexId i : settle_order) {
            while (shrink < region_dists.size() && region_dists[shrink] <= row.dist[i] / 2.0) {
                ++shrink;
            }
            if (i == p || adjacent[i]) {
                continue;
            }
            const double w_ip = static_cast<double>(shrink) * pair_weight(row.dist[i]);
            const std::uint32_t b = pivot_index[i];
            if (b == kNoPivot) {
                model.terms.push_back({i, p, row.dist[i], w_ip, 0.0});
            } else {
                pivot_pair_w[b][a] = w_ip;  // weight on the i-side of pair {i=pivot b, p}
                pivot_pair_d[b][a] = row.dist[i];
            }
        }

        for (const Neighbor& nb : g.neighbors(p)) {
            adjacent[nb.to] = false;
        }
    }

    // Pivot-pivot pairs appear in both passes; merge them into a single term
    // carrying the two directed weights.
    for (std::size_t a = 0; a < h; ++a) {
        for (std::size_t b = a + 1; b < h; ++b) {
            if (pivot_pair_d[a][b] == 0.0 && pivot_pair_d[b][a] == 0.0) {
                continue;  // adjacent pivots are covered by their edge term
            }
            model.terms.push_back({pivots[a], pivots[b], pivot_pair_d[a][b],
                                   pivot_pair_w[a][b], pivot_pair_w[b][a]});
        }
    }

    model.preprocess_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return model;
}

SgdResult layout_sparse_sgd(const Graph& g, std::size_t h, const SgdOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    Rng pivot_rng = make_stream(options.seed, RngStream::Pivot);
    const PivotSelection selection = select_pivots_maxmin_random(g, h, pivot_rng);
    const PivotModel model = build_pivot_model(g, selection.pivots);
    const double preprocess_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    // Trace quality is always full stress, never the sparse objective: exact
    // below the evaluator threshold, sampled above it.
    StressProbe probe;
    if (g.num_vertices() <= 5000) {
        probe = [&g](const Layout& layout) { return full_stress(g, layout); };
    } else {
        auto probe_rng = std::make_shared<Rng>(make_stream(options.seed, RngStream::Probe));
        probe = [&g, probe_rng](const Layout& layout) {
            return sampled_full_stress(g, layout, 100'000, *probe_rng).estimate;
        };
    }

    SgdResult result = optimize_terms(g.num_vertices(), model.terms, options, probe);
    result.preprocess_s = preprocess_s;
    return result;
}

}  // namespace sgdlayout
