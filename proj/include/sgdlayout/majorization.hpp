// majorization.hpp - localized stress majorization, the comparison baseline.
//
// Each sweep visits vertices in ascending id and moves each one to the closed
// form minimum of its majorizing function given the current positions of all
// others (Gauss-Seidel updates, so later vertices see earlier moves). Total
// stress never increases across a sweep.

#pragma once

#include <cstdint>

#include "sgdlayout/sgd.hpp"
#include "sgdlayout/stress.hpp"

namespace sgdlayout {

struct MajorizeOptions {
    double rel_tol = 1e-5;  // stop when the relative stress decrease drops below this
    int max_iter = 1000;
    std::uint64_t seed = 0;
    int dim = 2;
};

struct MajorizeResult {
    Layout layout;
    std::vector<IterationRecord> trace;
    int iterations = 0;
    bool hit_cap = false;
    double preprocess_s = 0.0;
};

// Precomputed per-vertex incidence over a symmetric, finite-weight term list.
class Majorizer {
public:
    Majorizer(std::size_t n_vertices, const TermList& terms);

    // One Gauss-Seidel sweep; returns the stress after it. `max_move_out`, if
    // given, receives the largest single-vertex displacement of the sweep.
    double sweep(Layout& layout, Rng& degenerate_rng, double* max_move_out = nullptr) const;

    std::size_t num_vertices() const { return n_; }

private:
    struct Entry {
        VertexId other;
        double d;
        double w;
    };

    std::size_t n_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<Entry> entries_;
};

// Single sweep over an ad hoc term list (builds the incidence on the fly).
double majorize_iteration(Layout& layout, const TermList& terms, Rng& degenerate_rng);

// Full-model baseline: all-pairs distances, w = d^-2, random unit-square
// start, sweeps until the relative stress decrease falls under rel_tol or
// max_iter is exhausted.
MajorizeResult layout_majorization(const Graph& g, const MajorizeOptions& options = {});

}  // namespace sgdlayout
