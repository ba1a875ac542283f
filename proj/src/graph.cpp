#include "sgdlayout/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <queue>
#include <sstream>

namespace sgdlayout {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string lower(std::string s) {
    for (char& c : s) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return s;
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
    for (Edge& e : edges) {
        if (e.u >= n || e.v >= n) {
            throw GraphError("edge endpoint out of range: (" + std::to_string(e.u) + ", " +
                             std::to_string(e.v) + ") with n = " + std::to_string(n));
        }
        if (!(e.len > 0.0) || !std::isfinite(e.len)) {
            throw GraphError("edge length must be positive and finite");
        }
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
    }

    // Drop self-loops, then merge duplicates keeping the first occurrence.
    std::erase_if(edges, [](const Edge& e) { return e.u == e.v; });
    std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](const Edge& a, const Edge& b) {
                                return a.u == b.u && a.v == b.v;
                            }),
                edges.end());

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.unit_lengths_ = std::all_of(g.edges_.begin(), g.edges_.end(),
                                  [](const Edge& e) { return e.len == 1.0; });

    std::vector<std::size_t> deg(n, 0);
    for (const Edge& e : g.edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    }
    g.nbrs_.resize(g.offsets_[n]);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : g.edges_) {
        g.nbrs_[cursor[e.u]++] = {e.v, e.len};
        g.nbrs_[cursor[e.v]++] = {e.u, e.len};
    }
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(g.nbrs_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                  g.nbrs_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]),
                  [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });
    }
    return g;
}

Graph parse_matrix_market(std::istream& in, const MatrixMarketOptions& options) {
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) {
        throw ParseError("empty input", 1);
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }

    std::istringstream header(line);
    std::string banner, object, format, field, symmetry;
    header >> banner >> object >> format >> field >> symmetry;
    if (banner != "%%MatrixMarket") {
        throw ParseError("expected %%MatrixMarket header", line_no);
    }
    object = lower(object);
    format = lower(format);
    field = lower(field);
    symmetry = lower(symmetry);
    if (object != "matrix" || format != "coordinate") {
        throw ParseError("only 'matrix coordinate' inputs are supported", line_no);
    }
    const bool has_values = field == "real" || field == "integer";
    if (!has_values && field != "pattern") {
        throw ParseError("unsupported field '" + field + "' (expected pattern, real or integer)",
                         line_no);
    }
    const bool symmetric = symmetry == "symmetric";
    if (!symmetric && symmetry != "general") {
        throw ParseError("unsupported symmetry '" + symmetry + "' (expected symmetric or general)",
                         line_no);
    }

    // Comment block, then the dimension line.
    std::size_t rows = 0, cols = 0, nnz = 0;
    for (;;) {
        if (!std::getline(in, line)) {
            throw ParseError("missing dimension line", line_no + 1);
        }
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '%' || blank(line)) {
            continue;
        }
        std::istringstream dims(line);
        long long r = -1, c = -1, e = -1;
        if (!(dims >> r >> c >> e) || r < 0 || c < 0 || e < 0) {
            throw ParseError("malformed dimension line (expected 'rows cols nnz')", line_no);
        }
        rows = static_cast<std::size_t>(r);
        cols = static_cast<std::size_t>(c);
        nnz = static_cast<std::size_t>(e);
        break;
    }
    if (rows != cols) {
        throw GraphError("matrix must be square to describe a graph, got " +
                         std::to_string(rows) + " x " + std::to_string(cols));
    }

    std::vector<Edge> edges;
    edges.reserve(nnz);
    std::size_t entries = 0;
    while (entries < nnz) {
        if (!std::getline(in, line)) {
            throw ParseError("unexpected end of input: read " + std::to_string(entries) +
                                 " of " + std::to_string(nnz) + " entries",
                             line_no + 1);
        }
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '%' || blank(line)) {
            continue;
        }

        const char* p = line.c_str();
        char* end = nullptr;
        const long long i1 = std::strtoll(p, &end, 10);
        if (end == p) {
            throw ParseError("malformed entry", line_no);
        }
        p = end;
        const long long j1 = std::strtoll(p, &end, 10);
        if (end == p) {
            throw ParseError("malformed entry: missing column index", line_no);
        }
        p = end;
        double value = 1.0;
        if (has_values) {
            value = std::strtod(p, &end);
            if (end == p) {
                throw ParseError("malformed entry: missing value", line_no);
            }
        }
        if (i1 < 1 || j1 < 1 || static_cast<std::size_t>(i1) > rows ||
            static_cast<std::size_t>(j1) > rows) {
            throw ParseError("entry index out of range", line_no);
        }
        ++entries;

        if (i1 == j1) {
            continue;  // self-loop, dropped
        }
        double len = 1.0;
        if (options.use_values && has_values) {
            len = std::fabs(value);
            if (len == 0.0) {
                throw ParseError("zero entry value cannot be used as an edge length", line_no);
            }
        }
        edges.push_back({static_cast<VertexId>(i1 - 1), static_cast<VertexId>(j1 - 1), len});
    }

    return Graph::from_edges(rows, std::move(edges));
}

Graph load_graph(const std::string& path, const MatrixMarketOptions& options) {
    std::ifstream in(path);
    if (!in) {
        throw GraphError("cannot open '" + path + "'");
    }
    try {
        return parse_matrix_market(in, options);
    } catch (const std::exception& e) {
        throw GraphError(path + ": " + e.what());
    }
}

namespace {

DistanceResult bfs(const Graph& g, VertexId source, std::vector<VertexId>* order) {
    DistanceResult result{source, std::vector<double>(g.num_vertices(), kInf)};
    result.dist[source] = 0.0;
    std::vector<VertexId> queue;
    queue.reserve(g.num_vertices());
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId u = queue[head];
        const double du = result.dist[u];
        for (const Neighbor& nb : g.neighbors(u)) {
            if (result.dist[nb.to] == kInf) {
                result.dist[nb.to] = du + 1.0;
                queue.push_back(nb.to);
            }
        }
    }
    if (order != nullptr) {
        *order = std::move(queue);
    }
    return result;
}

DistanceResult dijkstra(const Graph& g, VertexId source, std::vector<VertexId>* order) {
    DistanceResult result{source, std::vector<double>(g.num_vertices(), kInf)};
    result.dist[source] = 0.0;
    if (order != nullptr) {
        order->clear();
    }

    using Entry = std::pair<double, VertexId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    heap.push({0.0, source});
    std::vector<bool> settled(g.num_vertices(), false);
    while (!heap.empty()) {
        const auto [du, u] = heap.top();
        heap.pop();
        if (settled[u]) {
            continue;
        }
        settled[u] = true;
        if (order != nullptr) {
            order->push_back(u);
        }
        for (const Neighbor& nb : g.neighbors(u)) {
            const double cand = du + nb.len;
            if (cand < result.dist[nb.to]) {
                result.dist[nb.to] = cand;
                heap.push({cand, nb.to});
            }
        }
    }
    return result;
}

}  // namespace

DistanceResult sssp(const Graph& g, VertexId source, bool weighted) {
    if (source >= g.num_vertices()) {
        throw GraphError("sssp source out of range");
    }
    if (!weighted && g.has_unit_lengths()) {
        return bfs(g, source, nullptr);
    }
    return dijkstra(g, source, nullptr);
}

DistanceResult sssp(const Graph& g, VertexId source, bool weighted,
                    std::vector<VertexId>& settle_order) {
    if (source >= g.num_vertices()) {
        throw GraphError("sssp source out of range");
    }
    if (!weighted && g.has_unit_lengths()) {
        return bfs(g, source, &settle_order);
    }
    return dijkstra(g, source, &settle_order);
}

double CondensedDistances::max() const {
    double m = 0.0;
    for (double v : d_) {
        m = std::max(m, v);
    }
    return m;
}

CondensedDistances all_pairs(const Graph& g) {
    const std::size_t n = g.num_vertices();
    if (const std::size_t c = component_count(g); c != 1) {
        throw DisconnectedError(c);
    }
    const bool weighted = !g.has_unit_lengths();
    CondensedDistances table(n);
    for (VertexId s = 0; s + 1 < n; ++s) {
        const DistanceResult row = sssp(g, s, weighted);
        for (VertexId j = s + 1; j < n; ++j) {
            table.at(s, j) = row.dist[j];
        }
    }
    return table;
}

std::size_t component_count(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<bool> seen(n, false);
    std::vector<VertexId> stack;
    std::size_t count = 0;
    for (VertexId s = 0; s < n; ++s) {
        if (seen[s]) {
            continue;
        }
        ++count;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            const VertexId u = stack.back();
            stack.pop_back();
            for (const Neighbor& nb : g.neighbors(u)) {
                if (!seen[nb.to]) {
                    seen[nb.to] = true;
                    stack.push_back(nb.to);
                }
            }
        }
    }
    return count;
}

ComponentExtraction largest_component(const Graph& g) {
    const std::size_t n = g.num_vertices();
    if (n == 0) {
        throw GraphError("cannot extract a component from an empty graph");
    }

    std::vector<std::int64_t> component(n, -1);
    std::vector<std::size_t> sizes;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < n; ++s) {
        if (component[s] >= 0) {
            continue;
        }
        const std::int64_t id = static_cast<std::int64_t>(sizes.size());
        std::size_t size = 0;
        component[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            const VertexId u = stack.back();
            stack.pop_back();
            ++size;
            for (const Neighbor& nb : g.neighbors(u)) {
                if (component[nb.to] < 0) {
                    component[nb.to] = id;
                    stack.push_back(nb.to);
                }
            }
        }
        sizes.push_back(size);
    }

    // Largest component; ties break toward the one seen first, i.e. the one
    // containing the smallest vertex id.
    std::size_t best = 0;
    for (std::size_t c = 1; c < sizes.size(); ++c) {
        if (sizes[c] > sizes[best]) {
            best = c;
        }
    }

    ComponentExtraction out;
    std::vector<VertexId> new_id(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        if (component[v] == static_cast<std::int64_t>(best)) {
            new_id[v] = static_cast<VertexId>(out.orig_vertex.size());
            out.orig_vertex.push_back(v);
        }
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (component[e.u] == static_cast<std::int64_t>(best)) {
            edges.push_back({new_id[e.u], new_id[e.v], e.len});
        }
    }
    out.graph = Graph::from_edges(out.orig_vertex.size(), std::move(edges));
    return out;
}

}  // namespace sgdlayout
