#include "sgdlayout/majorization.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace sgdlayout {

Majorizer::Majorizer(std::size_t n_vertices, const TermList& terms) : n_(n_vertices) {
    std::vector<std::size_t> deg(n_, 0);
    for (const Term& t : terms) {
        if (!std::isfinite(t.w_ij) || !std::isfinite(t.w_ji)) {
            throw std::invalid_argument("majorization requires finite term weights");
        }
        ++deg[t.i];
        ++deg[t.j];
    }
    offsets_.assign(n_ + 1, 0);
    for (std::size_t v = 0; v < n_; ++v) {
        offsets_[v + 1] = offsets_[v] + deg[v];
    }
    entries_.resize(offsets_[n_]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const Term& t : terms) {
        entries_[cursor[t.i]++] = {t.j, t.d, t.w_ij};
        entries_[cursor[t.j]++] = {t.i, t.d, t.w_ji};
    }
    for (std::size_t v = 0; v < n_; ++v) {
        if (deg[v] == 0) {
            throw std::invalid_argument("majorization requires every vertex in at least one term");
        }
    }
}

double Majorizer::sweep(Layout& layout, Rng& degenerate_rng, double* max_move_out) const {
    const int dim = layout.dim();
    std::vector<double> numer(static_cast<std::size_t>(dim));
    double max_move2 = 0.0;

    for (VertexId i = 0; i < n_; ++i) {
        double* xi = layout.row(i);
        std::fill(numer.begin(), numer.end(), 0.0);
        double denom = 0.0;

        for (std::size_t e = offsets_[i]; e < offsets_[i + 1]; ++e) {
            const Entry& entry = entries_[e];
            const double* xj = layout.row(entry.other);
            double norm2 = 0.0;
            for (int k = 0; k < dim; ++k) {
                const double diff = xi[k] - xj[k];
                norm2 += diff * diff;
            }
            const double norm = std::sqrt(norm2);

            if (norm < kDegenerateDistance) {
                const std::vector<double> u = random_unit_vector(dim, degenerate_rng);
                for (int k = 0; k < dim; ++k) {
                    numer[k] += entry.w * (xj[k] + entry.d * u[k]);
                }
            } else {
                const double ratio = entry.d / norm;
                for (int k = 0; k < dim; ++k) {
                    numer[k] += entry.w * (xj[k] + ratio * (xi[k] - xj[k]));
                }
            }
            denom += entry.w;
        }

        double move2 = 0.0;
        for (int k = 0; k < dim; ++k) {
            const double updated = numer[k] / denom;
            const double delta = updated - xi[k];
            move2 += delta * delta;
            xi[k] = updated;
        }
        max_move2 = std::max(max_move2, move2);
    }

    if (max_move_out != nullptr) {
        *max_move_out = std::sqrt(max_move2);
    }

    // Stress after the sweep; every unordered term appears twice in entries_.
    double total = 0.0;
    for (VertexId i = 0; i < n_; ++i) {
        for (std::size_t e = offsets_[i]; e < offsets_[i + 1]; ++e) {
            const Entry& entry = entries_[e];
            const double diff = layout.distance(i, entry.other) - entry.d;
            total += entry.w * diff * diff;
        }
    }
    return total / 2.0;
}

double majorize_iteration(Layout& layout, const TermList& terms, Rng& degenerate_rng) {
    return Majorizer(layout.size(), terms).sweep(layout, degenerate_rng);
}

MajorizeResult layout_majorization(const Graph& g, const MajorizeOptions& options) {
    if (!(options.rel_tol > 0.0)) {
        throw std::invalid_argument("rel_tol must be positive");
    }
    if (options.max_iter < 1) {
        throw std::invalid_argument("max_iter must be at least 1");
    }

    const auto preprocess_start = std::chrono::steady_clock::now();
    const CondensedDistances dists = all_pairs(g);
    const TermList terms = build_terms(dists);
    const Majorizer majorizer(g.num_vertices(), terms);
    const double preprocess_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - preprocess_start)
            .count();

    Rng init_rng = make_stream(options.seed, RngStream::Init);
    Rng degenerate_rng = make_stream(options.seed, RngStream::Degenerate);

    MajorizeResult result;
    result.preprocess_s = preprocess_s;
    result.layout = Layout::random_unit_square(g.num_vertices(), options.dim, init_rng);

    double previous = stress(result.layout, terms);
    const auto start = std::chrono::steady_clock::now();
    for (int t = 0; t < options.max_iter; ++t) {
        double max_move = 0.0;
        const double current = majorizer.sweep(result.layout, degenerate_rng, &max_move);

        IterationRecord record;
        record.iteration = t + 1;
        record.stress = current;
        record.max_move = max_move;
        record.elapsed_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        result.trace.push_back(record);
        result.iterations = t + 1;

        if (previous <= 0.0 || (previous - current) / previous < options.rel_tol) {
            return result;
        }
        previous = current;
    }
    result.hit_cap = true;
    return result;
}

}  // namespace sgdlayout
