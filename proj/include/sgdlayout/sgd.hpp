// sgd.hpp - capped-step stochastic gradient descent over pairwise terms.
//
// Each step takes one term and moves its endpoints toward the target
// separation by mu_i = min(w_ij eta, 1) and mu_j = min(w_ji eta, 1) of the
// satisfying displacement; a full pass over all terms is one iteration. The
// fixed schedule runs exactly t_max iterations, the convergent schedule runs
// until the largest single-step displacement of an iteration drops below
// delta (or a hard cap is reached).

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "sgdlayout/schedule.hpp"
#include "sgdlayout/stress.hpp"

namespace sgdlayout {

enum class ShuffleMode {
    InOrder,          // terms in storage order, no randomness
    IndicesOnly,      // fixed random relabeling of vertex ids, pairs in order
    WithReplacement,  // |terms| independent draws per iteration
    ShuffleOnce,      // one permutation, reused every iteration
    AlternateTwo,     // two permutations, selected by iteration parity
    RandomReshuffle,  // fresh permutation every iteration (default)
};

struct SgdOptions {
    ScheduleKind schedule_kind = ScheduleKind::Fixed;
    std::optional<int> t_max;  // defaults: 15 (fixed) / 30 (convergent)
    double epsilon = 0.1;      // final-mu target; values >= 1 degenerate to a constant schedule
    double delta = 0.03;       // convergent stopping threshold on max step displacement
    int convergence_cap = 1000;
    ShuffleMode shuffle_mode = ShuffleMode::RandomReshuffle;
    std::uint64_t seed = 0;
    int dim = 2;
    bool record_stress_trace = true;

    int effective_t_max() const {
        if (t_max) {
            return *t_max;
        }
        return schedule_kind == ScheduleKind::Fixed ? 15 : 30;
    }

    void validate() const;
};

struct IterationRecord {
    int iteration = 0;     // 1-based, the state after this many full passes
    double stress = 0.0;   // NaN when stress tracing is off
    double max_move = 0.0; // largest single-step displacement in the pass
    double elapsed_s = 0.0;
};

struct SgdResult {
    Layout layout;
    std::vector<IterationRecord> trace;
    int iterations = 0;
    bool hit_cap = false;     // convergent run stopped by the iteration cap
    double preprocess_s = 0.0;
};

// Relaxes one term at step size eta and returns the largest displacement any
// endpoint moved. Infinite weights clamp to mu = 1, zero weights leave their
// endpoint untouched; coincident pairs take a random direction.
double apply_step(Layout& layout, const Term& term, double eta, Rng& degenerate_rng);

// Produces the term visiting order for each iteration under a ShuffleMode.
class ShufflePlan {
public:
    ShufflePlan(std::size_t term_count, std::size_t vertex_count, const TermList& terms,
                ShuffleMode mode, Rng& rng);

    // Order for iteration t; the span stays valid until the next call.
    std::span<const std::uint32_t> order(int iteration);

    ShuffleMode mode() const { return mode_; }

private:
    ShuffleMode mode_;
    Rng* rng_;
    std::vector<std::uint32_t> order_;
    std::vector<std::uint32_t> alternate_;
};

// Hook for recording stress along the way; called at iteration boundaries.
using StressProbe = std::function<double(const Layout&)>;

// Runs the optimizer on an explicit term list over n vertices. Positions are
// initialized uniformly in the unit square (hypercube for dim > 2) from the
// seed's Init substream. `probe` overrides the default exact stress
// evaluation of the trace (used by the sparse model).
SgdResult optimize_terms(std::size_t n_vertices, const TermList& terms, const SgdOptions& options,
                         StressProbe probe = nullptr);

// Full-model layout: all-pairs shortest paths, w = d^-2 terms, then
// optimize_terms. Throws DisconnectedError for disconnected input.
SgdResult layout_sgd(const Graph& g, const SgdOptions& options = {});

}  // namespace sgdlayout
