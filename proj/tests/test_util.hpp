// Shared graph builders and fixtures for the test suites.

#pragma once

#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "sgdlayout/graph.hpp"
#include "sgdlayout/rng.hpp"

namespace testutil {

using sgdlayout::Edge;
using sgdlayout::Graph;
using sgdlayout::VertexId;

inline Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId v = 0; v + 1 < n; ++v) {
        edges.push_back({v, static_cast<VertexId>(v + 1), 1.0});
    }
    return Graph::from_edges(n, std::move(edges));
}

inline Graph cycle_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId v = 0; v < n; ++v) {
        edges.push_back({v, static_cast<VertexId>((v + 1) % n), 1.0});
    }
    return Graph::from_edges(n, std::move(edges));
}

inline Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId i = 0; i + 1 < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
            edges.push_back({i, j, 1.0});
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

// Hub is vertex 0.
inline Graph star_graph(std::size_t leaves) {
    std::vector<Edge> edges;
    for (VertexId v = 1; v <= leaves; ++v) {
        edges.push_back({0, v, 1.0});
    }
    return Graph::from_edges(leaves + 1, std::move(edges));
}

inline Graph grid_graph(std::size_t rows, std::size_t cols) {
    std::vector<Edge> edges;
    const auto id = [cols](std::size_t r, std::size_t c) {
        return static_cast<VertexId>(r * cols + c);
    };
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) {
                edges.push_back({id(r, c), id(r, c + 1), 1.0});
            }
            if (r + 1 < rows) {
                edges.push_back({id(r, c), id(r + 1, c), 1.0});
            }
        }
    }
    return Graph::from_edges(rows * cols, std::move(edges));
}

inline Graph binary_tree(int depth) {
    std::vector<Edge> edges;
    const std::size_t n = (std::size_t(1) << (depth + 1)) - 1;
    for (VertexId v = 1; v < n; ++v) {
        edges.push_back({static_cast<VertexId>((v - 1) / 2), v, 1.0});
    }
    return Graph::from_edges(n, std::move(edges));
}

// Random spanning tree plus `extra` random chords: always connected.
inline Graph random_connected(std::size_t n, std::size_t extra, std::uint64_t seed) {
    sgdlayout::Rng rng(seed);
    std::vector<Edge> edges;
    for (VertexId v = 1; v < n; ++v) {
        edges.push_back({static_cast<VertexId>(rng.next_below(v)), v, 1.0});
    }
    for (std::size_t e = 0; e < extra; ++e) {
        const auto u = static_cast<VertexId>(rng.next_below(n));
        const auto v = static_cast<VertexId>(rng.next_below(n));
        if (u != v) {
            edges.push_back({u, v, 1.0});
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

// Two cliques of size k joined by a single path of the given length.
inline Graph barbell_graph(std::size_t k, std::size_t bridge_len) {
    std::vector<Edge> edges;
    for (VertexId i = 0; i + 1 < k; ++i) {
        for (VertexId j = i + 1; j < k; ++j) {
            edges.push_back({i, j, 1.0});
            edges.push_back({static_cast<VertexId>(k + i), static_cast<VertexId>(k + j), 1.0});
        }
    }
    VertexId prev = static_cast<VertexId>(k - 1);
    for (std::size_t b = 0; b < bridge_len; ++b) {
        const auto mid = static_cast<VertexId>(2 * k + b);
        edges.push_back({prev, mid, 1.0});
        prev = mid;
    }
    edges.push_back({prev, static_cast<VertexId>(k)});
    return Graph::from_edges(2 * k + bridge_len, std::move(edges));
}

inline std::string data_dir() {
    if (const char* env = std::getenv("SGDLAYOUT_DATA_DIR")) {
        return env;
    }
#ifdef SGDLAYOUT_DATA_DIR
    return SGDLAYOUT_DATA_DIR;
#else
    return "data";
#endif
}

inline std::string data_path(const std::string& name) { return data_dir() + "/" + name; }

inline bool data_exists(const std::string& name) {
    return std::filesystem::exists(data_path(name));
}

}  // namespace testutil
