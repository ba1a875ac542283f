// extensions.hpp - focus constraints and Jaccard-similarity color embedding.

#pragma once

#include <array>

#include "sgdlayout/sgd.hpp"

namespace sgdlayout {

// Pins every pair involving `focus` by setting both of its weights to
// infinity: those terms then step with mu = 1 at any step size, so the focus
// vertex's distances are enforced exactly while everything else anneals.
TermList apply_focus(TermList terms, VertexId focus);

// Neighborhood dissimilarity d_ij = 1 - |N(i) ∩ N(j)| / |N(i) ∪ N(j)| over
// all pairs; 0 for identical neighborhoods, 1 for disjoint ones (including
// the two-isolated-vertices case, where the ratio is taken as 0).
CondensedDistances jaccard_distances(const Graph& g);

struct ColorEmbedding {
    std::vector<std::array<double, 3>> rgb;  // channels in [0, 1]
};

// Embeds the Jaccard dissimilarities in three dimensions and maps the result
// into RGB by per-axis min-max normalization. Zero-dissimilarity pairs
// (structural twins) cannot carry a d^-2 weight; they become hard coincidence
// constraints instead, excluded from the step-size bounds and snapped
// together once more after the run so twins get identical colors.
ColorEmbedding embed_rgb(const Graph& g, const SgdOptions& options = {});

}  // namespace sgdlayout
