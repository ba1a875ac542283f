#include "sgdlayout/sgd.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace sgdlayout {

void SgdOptions::validate() const {
    if (effective_t_max() < 1) {
        throw std::invalid_argument("t_max must be at least 1");
    }
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("epsilon must be positive");
    }
    if (!(delta > 0.0)) {
        throw std::invalid_argument("delta must be positive");
    }
    if (dim < 1) {
        throw std::invalid_argument("dim must be at least 1");
    }
    if (convergence_cap < 1) {
        throw std::invalid_argument("convergence cap must be at least 1");
    }
}

double apply_step(Layout& layout, const Term& term, double eta, Rng& degenerate_rng) {
    const double mu_i = std::min(term.w_ij * eta, 1.0);
    const double mu_j = std::min(term.w_ji * eta, 1.0);

    const int dim = layout.dim();
    double* xi = layout.row(term.i);
    double* xj = layout.row(term.j);

    double norm2 = 0.0;
    for (int k = 0; k < dim; ++k) {
        const double diff = xi[k] - xj[k];
        norm2 += diff * diff;
    }
    const double norm = std::sqrt(norm2);

    if (norm < kDegenerateDistance) {
        const std::vector<double> u = random_unit_vector(dim, degenerate_rng);
        const double scale = (norm - term.d) / 2.0;
        for (int k = 0; k < dim; ++k) {
            const double r = scale * u[k];
            xi[k] -= mu_i * r;
            xj[k] += mu_j * r;
        }
    } else {
        const double scale = (norm - term.d) / (2.0 * norm);
        for (int k = 0; k < dim; ++k) {
            const double r = scale * (xi[k] - xj[k]);
            xi[k] -= mu_i * r;
            xj[k] += mu_j * r;
        }
    }

    // ||mu r|| = mu |norm - d| / 2 since r is (norm - d)/2 times a unit vector.
    return std::max(mu_i, mu_j) * std::fabs(norm - term.d) / 2.0;
}

ShufflePlan::ShufflePlan(std::size_t term_count, std::size_t vertex_count, const TermList& terms,
                         ShuffleMode mode, Rng& rng)
    : mode_(mode), rng_(&rng), order_(term_count) {
    std::iota(order_.begin(), order_.end(), 0u);
    switch (mode_) {
        case ShuffleMode::InOrder:
        case ShuffleMode::WithReplacement:
        case ShuffleMode::RandomReshuffle:
            break;
        case ShuffleMode::ShuffleOnce:
            fisher_yates(order_, rng);
            break;
        case ShuffleMode::AlternateTwo:
            fisher_yates(order_, rng);
            alternate_ = order_;
            fisher_yates(alternate_, rng);
            break;
        case ShuffleMode::IndicesOnly: {
            // Relabel vertex ids once, then keep iterating pairs in order of
            // the relabeled ids: the data-inherent bias is gone but memory is
            // still walked in a fixed pattern.
            std::vector<std::uint32_t> relabel(vertex_count);
            std::iota(relabel.begin(), relabel.end(), 0u);
            fisher_yates(relabel, rng);
            std::sort(order_.begin(), order_.end(),
                      [&](std::uint32_t a, std::uint32_t b) {
                          const Term& ta = terms[a];
                          const Term& tb = terms[b];
                          const auto ka = std::minmax(relabel[ta.i], relabel[ta.j]);
                          const auto kb = std::minmax(relabel[tb.i], relabel[tb.j]);
                          return ka < kb;
                      });
            break;
        }
    }
}

std::span<const std::uint32_t> ShufflePlan::order(int iteration) {
    switch (mode_) {
        case ShuffleMode::InOrder:
        case ShuffleMode::IndicesOnly:
        case ShuffleMode::ShuffleOnce:
            return order_;
        case ShuffleMode::AlternateTwo:
            return iteration % 2 == 0 ? std::span<const std::uint32_t>(order_)
                                      : std::span<const std::uint32_t>(alternate_);
        case ShuffleMode::WithReplacement: {
            const std::size_t n = order_.size();
            for (std::uint32_t& idx : order_) {
                idx = static_cast<std::uint32_t>(rng_->next_below(n));
            }
            return order_;
        }
        case ShuffleMode::RandomReshuffle:
            fisher_yates(order_, *rng_);
            return order_;
    }
    return order_;
}

SgdResult optimize_terms(std::size_t n_vertices, const TermList& terms, const SgdOptions& options,
                         StressProbe probe) {
    options.validate();
    if (terms.empty()) {
        throw std::invalid_argument("cannot optimize an empty term list");
    }

    const int t_max = options.effective_t_max();
    const EtaBounds bounds = eta_bounds(terms, options.epsilon);
    const Schedule schedule = options.schedule_kind == ScheduleKind::Fixed
                                  ? Schedule::fixed(bounds, std::max(t_max, 2))
                                  : Schedule::convergent(bounds, std::max(t_max, 2));
    const bool convergent = options.schedule_kind == ScheduleKind::Convergent;
    const int iteration_limit = convergent ? options.convergence_cap : t_max;

    Rng init_rng = make_stream(options.seed, RngStream::Init);
    Rng shuffle_rng = make_stream(options.seed, RngStream::Shuffle);
    Rng degenerate_rng = make_stream(options.seed, RngStream::Degenerate);

    SgdResult result;
    result.layout = Layout::random_unit_square(n_vertices, options.dim, init_rng);
    ShufflePlan plan(terms.size(), n_vertices, terms, options.shuffle_mode, shuffle_rng);

    const auto start = std::chrono::steady_clock::now();
    for (int t = 0; t < iteration_limit; ++t) {
        const double eta = schedule.eta(t);
        double max_move = 0.0;
        for (std::uint32_t idx : plan.order(t)) {
            max_move = std::max(max_move,
                                apply_step(result.layout, terms[idx], eta, degenerate_rng));
        }

        IterationRecord record;
        record.iteration = t + 1;
        record.max_move = max_move;
        record.elapsed_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (options.record_stress_trace) {
            record.stress = probe ? probe(result.layout) : stress(result.layout, terms);
        } else {
            record.stress = std::numeric_limits<double>::quiet_NaN();
        }
        result.trace.push_back(record);
        result.iterations = t + 1;

        if (convergent && max_move < options.delta) {
            return result;
        }
    }
    result.hit_cap = convergent;
    return result;
}

SgdResult layout_sgd(const Graph& g, const SgdOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const CondensedDistances dists = all_pairs(g);
    const TermList terms = build_terms(dists);
    const double preprocess_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    SgdResult result = optimize_terms(g.num_vertices(), terms, options);
    result.preprocess_s = preprocess_s;
    return result;
}

}  // namespace sgdlayout
