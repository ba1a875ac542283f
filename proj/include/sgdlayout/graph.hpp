// graph.hpp - undirected graph representation, Matrix Market ingestion and
// exact shortest paths.
//
// Graphs are immutable after construction and safe to share across threads.
// Edges are undirected, self-loop free and deduplicated; lengths are strictly
// positive and default to 1.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgdlayout {

using VertexId = std::uint32_t;

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    double len = 1.0;
};

struct Neighbor {
    VertexId to = 0;
    double len = 1.0;
};

// Malformed Matrix Market input; `line` is 1-based within the stream.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line)
        : std::runtime_error(message + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Structural problems: non-square matrices, empty graphs, bad vertex ids.
class GraphError : public std::runtime_error {
public:
    explicit GraphError(const std::string& message) : std::runtime_error(message) {}
};

class DisconnectedError : public GraphError {
public:
    explicit DisconnectedError(std::size_t component_count)
        : GraphError("graph is disconnected (" + std::to_string(component_count) +
                     " components); pass the largest-component option to extract one"),
          component_count_(component_count) {}

    std::size_t component_count() const { return component_count_; }

private:
    std::size_t component_count_;
};

class Graph {
public:
    Graph() = default;

    // Canonicalizes the edge list: self-loops are dropped, duplicate undirected
    // edges merged (first occurrence wins), endpoints validated against n and
    // lengths checked positive. Adjacency is built symmetric and sorted.
    static Graph from_edges(std::size_t n, std::vector<Edge> edges);

    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }

    // Canonical edge list with u < v, sorted.
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const Neighbor> neighbors(VertexId v) const {
        return {nbrs_.data() + offsets_[v], nbrs_.data() + offsets_[v + 1]};
    }

    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

    bool has_unit_lengths() const { return unit_lengths_; }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<Neighbor> nbrs_;
    bool unit_lengths_ = true;
};

struct MatrixMarketOptions {
    // By default the nonzero pattern is read as unweighted edges. When set,
    // entry values become edge lengths (absolute value; zeros rejected).
    bool use_values = false;
};

// Parses a SuiteSparse-style Matrix Market coordinate stream:
// `%%MatrixMarket matrix coordinate <field> <symmetry>` with field one of
// pattern/real/integer and symmetry symmetric or general. General matrices are
// symmetrized by the union of (i,j) and (j,i). 1-based indices become 0-based.
Graph parse_matrix_market(std::istream& in, const MatrixMarketOptions& options = {});

// Convenience wrapper that opens `path` and prefixes errors with it.
Graph load_graph(const std::string& path, const MatrixMarketOptions& options = {});

struct DistanceResult {
    VertexId source = 0;
    std::vector<double> dist;  // infinity for unreachable vertices
};

// Exact single-source shortest paths. BFS when every length is 1 and
// `weighted` is off, Dijkstra otherwise; the two agree on unit-length graphs.
DistanceResult sssp(const Graph& g, VertexId source, bool weighted = false);

// As above, also reporting the order in which vertices were settled
// (nondecreasing distance); unreachable vertices are absent from the order.
DistanceResult sssp(const Graph& g, VertexId source, bool weighted,
                    std::vector<VertexId>& settle_order);

// Condensed upper-triangle table over unordered pairs i < j.
class CondensedDistances {
public:
    CondensedDistances() = default;
    explicit CondensedDistances(std::size_t n, double fill = 0.0)
        : n_(n), d_(n >= 2 ? n * (n - 1) / 2 : 0, fill) {}

    std::size_t n() const { return n_; }
    std::size_t pair_count() const { return d_.size(); }

    double& at(VertexId i, VertexId j) { return d_[index(i, j)]; }
    double at(VertexId i, VertexId j) const { return d_[index(i, j)]; }

    double max() const;

private:
    std::size_t index(VertexId i, VertexId j) const {
        if (i > j) {
            std::swap(i, j);
        }
        const std::size_t a = i;
        const std::size_t b = j;
        return a * (2 * n_ - a - 1) / 2 + (b - a - 1);
    }

    std::size_t n_ = 0;
    std::vector<double> d_;
};

// All-pairs shortest paths (one SSSP per source). Throws DisconnectedError
// naming the component count when g is not connected.
CondensedDistances all_pairs(const Graph& g);

std::size_t component_count(const Graph& g);

struct ComponentExtraction {
    Graph graph;
    std::vector<VertexId> orig_vertex;  // new id -> original id
};

// Induced subgraph on the largest connected component; size ties break toward
// the component containing the smallest vertex id. Throws on empty graphs.
ComponentExtraction largest_component(const Graph& g);

}  // namespace sgdlayout
