#include "sgdlayout/stress.hpp"

#include <cmath>
#include <stdexcept>

namespace sgdlayout {

std::vector<double> random_unit_vector(int dim, Rng& rng) {
    std::vector<double> u(static_cast<std::size_t>(dim));
    for (;;) {
        double norm2 = 0.0;
        for (double& c : u) {
            c = rng.uniform(-1.0, 1.0);
            norm2 += c * c;
        }
        if (norm2 > 1e-8 && norm2 <= 1.0) {
            const double inv = 1.0 / std::sqrt(norm2);
            for (double& c : u) {
                c *= inv;
            }
            return u;
        }
    }
}

Layout Layout::random_unit_square(std::size_t n, int dim, Rng& rng) {
    Layout layout(n, dim);
    for (double& c : layout.coords_) {
        c = rng.next_double();
    }
    return layout;
}

double Layout::distance(VertexId i, VertexId j) const {
    const double* xi = row(i);
    const double* xj = row(j);
    double norm2 = 0.0;
    for (int k = 0; k < dim_; ++k) {
        const double diff = xi[k] - xj[k];
        norm2 += diff * diff;
    }
    return std::sqrt(norm2);
}

TermList build_terms(const CondensedDistances& dists, double alpha) {
    if (alpha < 0.0) {
        throw std::invalid_argument("weight exponent must be non-negative");
    }
    const std::size_t n = dists.n();
    TermList terms;
    terms.reserve(dists.pair_count());
    for (VertexId i = 0; i + 1 < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
            const double d = dists.at(i, j);
            if (!(d > 0.0) || !std::isfinite(d)) {
                throw std::invalid_argument("pair distances must be positive and finite");
            }
            const double w = std::pow(d, -alpha);
            terms.push_back({i, j, d, w, w});
        }
    }
    return terms;
}

double stress(const Layout& layout, const TermList& terms) {
    double total = 0.0;
    for (const Term& t : terms) {
        if (!std::isfinite(t.w_ij)) {
            continue;
        }
        const double diff = layout.distance(t.i, t.j) - t.d;
        total += t.w_ij * diff * diff;
    }
    return total;
}

double focus_residual(const Layout& layout, const TermList& terms) {
    double worst = 0.0;
    for (const Term& t : terms) {
        if (std::isfinite(t.w_ij) && std::isfinite(t.w_ji)) {
            continue;
        }
        worst = std::max(worst, std::fabs(layout.distance(t.i, t.j) - t.d));
    }
    return worst;
}

std::vector<double> term_displacement(const Layout& layout, const Term& term,
                                      Rng& degenerate_rng) {
    const int dim = layout.dim();
    const double* xi = layout.row(term.i);
    const double* xj = layout.row(term.j);
    double norm2 = 0.0;
    for (int k = 0; k < dim; ++k) {
        const double diff = xi[k] - xj[k];
        norm2 += diff * diff;
    }
    const double norm = std::sqrt(norm2);

    std::vector<double> r(static_cast<std::size_t>(dim));
    if (norm < kDegenerateDistance) {
        const std::vector<double> u = random_unit_vector(dim, degenerate_rng);
        const double scale = (norm - term.d) / 2.0;
        for (int k = 0; k < dim; ++k) {
            r[k] = scale * u[k];
        }
    } else {
        const double scale = (norm - term.d) / (2.0 * norm);
        for (int k = 0; k < dim; ++k) {
            r[k] = scale * (xi[k] - xj[k]);
        }
    }
    return r;
}

std::vector<double> term_gradient(const Layout& layout, const Term& term, Rng& degenerate_rng) {
    std::vector<double> grad = term_displacement(layout, term, degenerate_rng);
    for (double& c : grad) {
        c *= 4.0 * term.w_ij;
    }
    return grad;
}

double full_stress(const Graph& g, const Layout& layout, double alpha) {
    const std::size_t n = g.num_vertices();
    const bool weighted = !g.has_unit_lengths();
    double total = 0.0;
    for (VertexId s = 0; s + 1 < n; ++s) {
        const DistanceResult row = sssp(g, s, weighted);
        for (VertexId j = s + 1; j < n; ++j) {
            const double d = row.dist[j];
            if (!std::isfinite(d)) {
                throw DisconnectedError(component_count(g));
            }
            const double diff = layout.distance(s, j) - d;
            total += std::pow(d, -alpha) * diff * diff;
        }
    }
    return total;
}

SampledStress sampled_full_stress(const Graph& g, const Layout& layout, std::size_t pair_budget,
                                  Rng& rng, double alpha) {
    const std::size_t n = g.num_vertices();
    if (n < 2 || pair_budget == 0) {
        return {};
    }
    const bool weighted = !g.has_unit_lengths();

    // One shortest-path row covers many sampled pairs; spread the budget over
    // enough sources that per-source bias stays small.
    const std::size_t pairs_per_source = std::min<std::size_t>(n - 1, 1024);
    const std::size_t sources = (pair_budget + pairs_per_source - 1) / pairs_per_source;

    double sum = 0.0;
    double sum_sq = 0.0;
    std::size_t samples = 0;
    for (std::size_t s = 0; s < sources; ++s) {
        const VertexId src = static_cast<VertexId>(rng.next_below(n));
        const DistanceResult row = sssp(g, src, weighted);
        for (std::size_t k = 0; k < pairs_per_source && samples < pair_budget; ++k) {
            VertexId j = static_cast<VertexId>(rng.next_below(n - 1));
            if (j >= src) {
                ++j;  // uniform over j != src
            }
            const double d = row.dist[j];
            if (!std::isfinite(d)) {
                throw DisconnectedError(component_count(g));
            }
            const double diff = layout.distance(src, j) - d;
            const double contribution = std::pow(d, -alpha) * diff * diff;
            sum += contribution;
            sum_sq += contribution * contribution;
            ++samples;
        }
    }

    // Sampled ordered pairs (i != j) estimate the mean per-pair contribution;
    // scale up to the n(n-1)/2 unordered pairs of the full summation.
    const double mean = sum / static_cast<double>(samples);
    const double var =
        std::max(0.0, sum_sq / static_cast<double>(samples) - mean * mean);
    const double total_pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
    SampledStress out;
    out.estimate = mean * total_pairs;
    out.ci_halfwidth = 1.96 * std::sqrt(var / static_cast<double>(samples)) * total_pairs;
    out.pairs = samples;
    return out;
}

}  // namespace sgdlayout
