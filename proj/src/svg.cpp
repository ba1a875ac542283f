#include "sgdlayout/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sgdlayout {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string hex_color(const std::array<double, 3>& rgb) {
    char buf[8];
    const auto channel = [](double c) {
        return static_cast<int>(std::lround(std::clamp(c, 0.0, 1.0) * 255.0));
    };
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", channel(rgb[0]), channel(rgb[1]),
                  channel(rgb[2]));
    return buf;
}

}  // namespace

std::string emit_svg(const Layout& layout, const Graph& g, const ColorEmbedding* colors,
                     const SvgOptions& options) {
    const std::size_t n = layout.size();
    if (n == 0 || layout.dim() < 2) {
        throw std::invalid_argument("svg output needs a non-empty layout of dimension >= 2");
    }
    for (double c : layout.data()) {
        if (!std::isfinite(c)) {
            throw std::invalid_argument("svg output needs finite coordinates");
        }
    }

    double min_x = layout.row(0)[0], max_x = min_x;
    double min_y = layout.row(0)[1], max_y = min_y;
    for (VertexId v = 1; v < n; ++v) {
        min_x = std::min(min_x, layout.row(v)[0]);
        max_x = std::max(max_x, layout.row(v)[0]);
        min_y = std::min(min_y, layout.row(v)[1]);
        max_y = std::max(max_y, layout.row(v)[1]);
    }
    double width = max_x - min_x;
    double height = max_y - min_y;
    const double pad = std::max({width, height, 1e-9}) * options.margin_frac;
    min_x -= pad;
    min_y -= pad;
    width += 2 * pad;
    height += 2 * pad;
    const double radius = std::max(width, height) * options.vertex_radius_frac;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + fmt(min_x) +
           " " + fmt(min_y) + " " + fmt(width) + " " + fmt(height) + "\">\n";

    if (options.draw_edges) {
        out += "<g stroke=\"#444444\" stroke-opacity=\"0.6\" stroke-width=\"" +
               fmt(radius * 0.5) + "\">\n";
        for (const Edge& e : g.edges()) {
            out += "<line x1=\"" + fmt(layout.row(e.u)[0]) + "\" y1=\"" +
                   fmt(layout.row(e.u)[1]) + "\" x2=\"" + fmt(layout.row(e.v)[0]) + "\" y2=\"" +
                   fmt(layout.row(e.v)[1]) + "\"/>\n";
        }
        out += "</g>\n";
    }

    out += "<g>\n";
    for (VertexId v = 0; v < n; ++v) {
        const std::string fill =
            colors != nullptr && v < colors->rgb.size() ? hex_color(colors->rgb[v]) : "#d02020";
        out += "<circle cx=\"" + fmt(layout.row(v)[0]) + "\" cy=\"" + fmt(layout.row(v)[1]) +
               "\" r=\"" + fmt(radius) + "\" fill=\"" + fill + "\"/>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace sgdlayout
