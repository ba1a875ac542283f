// svg.hpp - node-link rendering of a layout as an SVG 1.1 document.

#pragma once

#include <string>

#include "sgdlayout/extensions.hpp"
#include "sgdlayout/stress.hpp"

namespace sgdlayout {

struct SvgOptions {
    double margin_frac = 0.05;         // viewBox padding around the bounding box
    double vertex_radius_frac = 0.004; // of the larger viewBox dimension
    bool draw_edges = true;
};

// Edges as <line>, vertices as <circle>; the first two layout dimensions are
// used. Pass `colors` to fill vertices from an RGB embedding.
std::string emit_svg(const Layout& layout, const Graph& g,
                     const ColorEmbedding* colors = nullptr, const SvgOptions& options = {});

}  // namespace sgdlayout
