#include "sgdlayout/extensions.hpp"

#include <algorithm>
#include <cmath>

namespace sgdlayout {

TermList apply_focus(TermList terms, VertexId focus) {
    for (Term& t : terms) {
        if (t.i == focus || t.j == focus) {
            t.w_ij = kInfiniteWeight;
            t.w_ji = kInfiniteWeight;
        }
    }
    return terms;
}

CondensedDistances jaccard_distances(const Graph& g) {
    const std::size_t n = g.num_vertices();
    CondensedDistances table(n);
    for (VertexId i = 0; i + 1 < n; ++i) {
        const auto ni = g.neighbors(i);
        for (VertexId j = i + 1; j < n; ++j) {
            const auto nj = g.neighbors(j);
            // Adjacency lists are sorted; count the intersection in one merge.
            std::size_t common = 0;
            std::size_t a = 0, b = 0;
            while (a < ni.size() && b < nj.size()) {
                if (ni[a].to < nj[b].to) {
                    ++a;
                } else if (ni[a].to > nj[b].to) {
                    ++b;
                } else {
                    ++common;
                    ++a;
                    ++b;
                }
            }
            const std::size_t unions = ni.size() + nj.size() - common;
            table.at(i, j) =
                unions == 0 ? 1.0 : 1.0 - static_cast<double>(common) / static_cast<double>(unions);
        }
    }
    return table;
}

ColorEmbedding embed_rgb(const Graph& g, const SgdOptions& options) {
    const std::size_t n = g.num_vertices();
    ColorEmbedding colors;
    colors.rgb.assign(n, {0.5, 0.5, 0.5});
    if (n < 2) {
        return colors;
    }

    const CondensedDistances dists = jaccard_distances(g);
    TermList terms;
    TermList pins;
    terms.reserve(dists.pair_count());
    for (VertexId i = 0; i + 1 < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
            const double d = dists.at(i, j);
            if (d > 0.0) {
                const double w = 1.0 / (d * d);
                terms.push_back({i, j, d, w, w});
            } else {
                pins.push_back({i, j, 0.0, kInfiniteWeight, kInfiniteWeight});
            }
        }
    }
    terms.insert(terms.end(), pins.begin(), pins.end());

    SgdOptions opts = options;
    opts.dim = 3;
    SgdResult result = optimize_terms(n, terms, opts);

    // Final projection so twins coincide exactly regardless of where their
    // pins fell inside the last shuffled pass: collapse each twin group
    // (connected component of pin pairs) onto its centroid.
    if (!pins.empty()) {
        std::vector<VertexId> root(n);
        for (VertexId v = 0; v < n; ++v) {
            root[v] = v;
        }
        const auto find = [&root](VertexId v) {
            while (root[v] != v) {
                v = root[v] = root[root[v]];
            }
            return v;
        };
        for (const Term& pin : pins) {
            root[find(pin.i)] = find(pin.j);
        }
        std::vector<std::array<double, 4>> centroid(n, {0.0, 0.0, 0.0, 0.0});
        for (VertexId v = 0; v < n; ++v) {
            auto& acc = centroid[find(v)];
            for (int k = 0; k < 3; ++k) {
                acc[k] += result.layout.row(v)[k];
            }
            acc[3] += 1.0;
        }
        for (VertexId v = 0; v < n; ++v) {
            const auto& acc = centroid[find(v)];
            for (int k = 0; k < 3; ++k) {
                result.layout.row(v)[k] = acc[k] / acc[3];
            }
        }
    }

    std::array<double, 3> lo{};
    std::array<double, 3> hi{};
    for (int k = 0; k < 3; ++k) {
        lo[k] = hi[k] = result.layout.row(0)[k];
    }
    for (VertexId v = 1; v < n; ++v) {
        const double* x = result.layout.row(v);
        for (int k = 0; k < 3; ++k) {
            lo[k] = std::min(lo[k], x[k]);
            hi[k] = std::max(hi[k], x[k]);
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        const double* x = result.layout.row(v);
        for (int k = 0; k < 3; ++k) {
            const double range = hi[k] - lo[k];
            colors.rgb[v][k] = range > 0.0 ? (x[k] - lo[k]) / range : 0.5;
        }
    }
    return colors;
}

}  // namespace sgdlayout
