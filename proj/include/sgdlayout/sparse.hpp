// sparse.hpp - pivot-based sparse approximation of the stress model.
//
// Instead of all O(n^2) pairs, the term list is E plus one term per
// (vertex, pivot) pair. Each pivot p owns the region R(p) of vertices closer
// to it than to any other pivot, and the weight of term (i, p) on the i side
// is scaled by s_ip = |{j in R(p) : d_jp <= d_ip / 2}| so that the pivot
// stands in for its region without overweighting nearby vertices. Pivot-side
// weights are zero unless the other endpoint is itself a pivot, so non-pivot
// vertices never drag a pivot around.

#pragma once

#include "sgdlayout/sgd.hpp"

namespace sgdlayout {

struct PivotModel {
    std::vector<VertexId> pivots;      // in selection order
    std::vector<VertexId> region;      // per vertex: owning pivot id
    TermList terms;                    // edge terms first, then pivot terms
    std::size_t edge_term_count = 0;
    double preprocess_s = 0.0;

    // The decomposed objective this model optimizes: edge terms count once
    // with their symmetric weight, pivot terms contribute each directed
    // weight. Distinct from the full stress used to judge layout quality.
    double objective(const Layout& layout) const;
};

// max/min random sp selection: the first pivot is uniform, each subsequent
// one is sampled with probability proportional to its distance to the nearest
// already-chosen pivot. Returns the chosen pivots and the final min-distance
// array. Requires 1 <= h <= n and a connected graph.
struct PivotSelection {
    std::vector<VertexId> pivots;
    std::vector<double> min_dist;  // distance to nearest pivot, 0 at pivots
};
PivotSelection select_pivots_maxmin_random(const Graph& g, std::size_t h, Rng& rng);

// Runs one shortest-path pass per pivot, assigns regions (distance ties break
// toward the earlier-selected pivot) and assembles the adapted term list.
// Unordered pairs where both endpoints are pivots appear once, carrying both
// directed weights.
PivotModel build_pivot_model(const Graph& g, const std::vector<VertexId>& pivots);

// Sparse layout run: pivot selection (Pivot substream of the seed), model
// construction, then the same capped-step loop as layout_sgd over the adapted
// terms. The stress trace reports exact full stress for n <= 5000 and a
// sampled estimate above that.
SgdResult layout_sparse_sgd(const Graph& g, std::size_t h, const SgdOptions& options = {});

}  // namespace sgdlayout
