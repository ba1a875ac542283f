// stress.hpp - the distance-scaling stress objective over pairwise terms.
//
// stress(X) = sum over unordered pairs of w_ij (||X_i - X_j|| - d_ij)^2 with
// the usual weighting w_ij = d_ij^-alpha (alpha = 2 by default). Terms carry
// one weight per endpoint: the full model keeps them equal, the sparse pivot
// model does not, and infinite weights mark hard (focus) constraints.

#pragma once

#include <limits>
#include <vector>

#include "sgdlayout/graph.hpp"
#include "sgdlayout/rng.hpp"

namespace sgdlayout {

struct Term {
    VertexId i = 0;
    VertexId j = 0;
    double d = 0.0;     // target distance; > 0 except for infinite-weight pins
    double w_ij = 0.0;  // weight applied when moving i
    double w_ji = 0.0;  // weight applied when moving j
};

using TermList = std::vector<Term>;

constexpr double kInfiniteWeight = std::numeric_limits<double>::infinity();

// Below this separation a pair counts as coincident and the step direction is
// drawn at random instead of dividing by the (near-zero) distance.
constexpr double kDegenerateDistance = 1e-9;

// n x k coordinate matrix, row per vertex.
class Layout {
public:
    Layout() = default;
    Layout(std::size_t n, int dim) : n_(n), dim_(dim), coords_(n * static_cast<std::size_t>(dim), 0.0) {}

    // Uniform positions in the unit hypercube [0,1)^dim.
    static Layout random_unit_square(std::size_t n, int dim, Rng& rng);

    std::size_t size() const { return n_; }
    int dim() const { return dim_; }

    double* row(VertexId v) { return coords_.data() + static_cast<std::size_t>(v) * dim_; }
    const double* row(VertexId v) const {
        return coords_.data() + static_cast<std::size_t>(v) * dim_;
    }

    double distance(VertexId i, VertexId j) const;

    std::vector<double>& data() { return coords_; }
    const std::vector<double>& data() const { return coords_; }

private:
    std::size_t n_ = 0;
    int dim_ = 0;
    std::vector<double> coords_;
};

// One term per unordered pair with w_ij = w_ji = d^-alpha. Rejects alpha < 0
// and non-positive distances. Terms are laid out contiguously in (i, j) order.
TermList build_terms(const CondensedDistances& dists, double alpha = 2.0);

// Total stress over finite-weight terms, each unordered pair counted once
// with its i-side weight (the two sides agree in the full model).
// Infinite-weight constraints are excluded; see focus_residual.
double stress(const Layout& layout, const TermList& terms);

// Largest |distance - d| over infinite-weight terms; 0 when there are none.
double focus_residual(const Layout& layout, const TermList& terms);

// r = ((||X_i - X_j|| - d) / 2) * (X_i - X_j) / ||X_i - X_j||; moving i by -r
// and j by +r satisfies the term exactly. Coincident pairs take a random unit
// direction from `degenerate_rng`.
std::vector<double> term_displacement(const Layout& layout, const Term& term,
                                      Rng& degenerate_rng);

// Gradient of w_ij (||X_i - X_j|| - d)^2 with respect to X_i, i.e. 4 w_ij r.
// The gradient with respect to X_j is its negation, and zero elsewhere.
std::vector<double> term_gradient(const Layout& layout, const Term& term, Rng& degenerate_rng);

// Exact full-model stress without materializing the pair table: one shortest
// path pass per source. Intended for evaluating sparse layouts post hoc.
double full_stress(const Graph& g, const Layout& layout, double alpha = 2.0);

struct SampledStress {
    double estimate = 0.0;
    double ci_halfwidth = 0.0;  // 95% normal-approximation half width
    std::size_t pairs = 0;
};

// Monte Carlo estimate of the full-model stress from `pair_budget` sampled
// pairs, computing shortest path rows on demand. Used when n is too large for
// the exact evaluator.
SampledStress sampled_full_stress(const Graph& g, const Layout& layout, std::size_t pair_budget,
                                  Rng& rng, double alpha = 2.0);

}  // namespace sgdlayout
