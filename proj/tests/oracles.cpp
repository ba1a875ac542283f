#include "oracles.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "sgdlayout/rng.hpp"

namespace oracle {

namespace {

double objective(const std::vector<double>& x, int dim, const std::vector<WeightedPair>& pairs) {
    double f = 0.0;
    for (const WeightedPair& p : pairs) {
        double norm2 = 0.0;
        for (int k = 0; k < dim; ++k) {
            const double diff = x[p.i * dim + k] - x[p.j * dim + k];
            norm2 += diff * diff;
        }
        const double diff = std::sqrt(norm2) - p.d;
        f += p.w * diff * diff;
    }
    return f;
}

void gradient(const std::vector<double>& x, int dim, const std::vector<WeightedPair>& pairs,
              std::vector<double>& g) {
    std::fill(g.begin(), g.end(), 0.0);
    for (const WeightedPair& p : pairs) {
        double norm2 = 0.0;
        for (int k = 0; k < dim; ++k) {
            const double diff = x[p.i * dim + k] - x[p.j * dim + k];
            norm2 += diff * diff;
        }
        const double norm = std::sqrt(norm2);
        if (norm < 1e-12) {
            continue;
        }
        const double coeff = 2.0 * p.w * (norm - p.d) / norm;
        for (int k = 0; k < dim; ++k) {
            const double diff = x[p.i * dim + k] - x[p.j * dim + k];
            g[p.i * dim + k] += coeff * diff;
            g[p.j * dim + k] -= coeff * diff;
        }
    }
}

}  // namespace

MinimizeResult minimize_stress(std::size_t n, int dim, const std::vector<WeightedPair>& pairs,
                               int restarts, std::uint64_t seed, int max_iter, double grad_tol) {
    MinimizeResult best;
    best.value = std::numeric_limits<double>::infinity();

    sgdlayout::Rng rng(seed);
    std::vector<double> x(n * dim);
    std::vector<double> g(n * dim);
    std::vector<double> trial(n * dim);

    for (int r = 0; r < restarts; ++r) {
        for (double& c : x) {
            c = rng.next_double();
        }
        double f = objective(x, dim, pairs);
        double step = 0.1;
        for (int it = 0; it < max_iter; ++it) {
            gradient(x, dim, pairs, g);
            double gmax = 0.0;
            for (double c : g) {
                gmax = std::max(gmax, std::fabs(c));
            }
            if (gmax < grad_tol || step < 1e-18) {
                break;
            }
            for (std::size_t k = 0; k < x.size(); ++k) {
                trial[k] = x[k] - step * g[k];
            }
            const double ft = objective(trial, dim, pairs);
            if (ft < f) {
                x.swap(trial);
                f = ft;
                step *= 1.2;
            } else {
                step *= 0.5;
            }
        }
        if (f < best.value) {
            best.value = f;
            best.coords = x;
        }
    }
    return best;
}

std::vector<double> fd_term_gradient(const sgdlayout::Layout& layout, const sgdlayout::Term& term,
                                     double h) {
    const int dim = layout.dim();
    sgdlayout::Layout work = layout;
    std::vector<double> grad(static_cast<std::size_t>(dim));
    const auto contribution = [&]() {
        const double diff = work.distance(term.i, term.j) - term.d;
        return term.w_ij * diff * diff;
    };
    for (int k = 0; k < dim; ++k) {
        const double original = work.row(term.i)[k];
        work.row(term.i)[k] = original + h;
        const double up = contribution();
        work.row(term.i)[k] = original - h;
        const double down = contribution();
        work.row(term.i)[k] = original;
        grad[k] = (up - down) / (2.0 * h);
    }
    return grad;
}

namespace {

std::vector<int> plain_bfs(const sgdlayout::Graph& g, sgdlayout::VertexId source) {
    std::vector<int> dist(g.num_vertices(), -1);
    std::vector<sgdlayout::VertexId> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto u = queue[head];
        for (const auto& nb : g.neighbors(u)) {
            if (dist[nb.to] < 0) {
                dist[nb.to] = dist[u] + 1;
                queue.push_back(nb.to);
            }
        }
    }
    return dist;
}

}  // namespace

double double_sweep_diameter(const sgdlayout::Graph& g, sgdlayout::VertexId start) {
    const std::vector<int> first = plain_bfs(g, start);
    sgdlayout::VertexId far = start;
    for (sgdlayout::VertexId v = 0; v < g.num_vertices(); ++v) {
        if (first[v] > first[far]) {
            far = v;
        }
    }
    const std::vector<int> second = plain_bfs(g, far);
    int best = 0;
    for (int d : second) {
        best = std::max(best, d);
    }
    return static_cast<double>(best);
}

std::vector<std::vector<double>> shrink_counts_bruteforce(
    const sgdlayout::Graph& g, const std::vector<sgdlayout::VertexId>& pivots) {
    const std::size_t n = g.num_vertices();
    const std::size_t h = pivots.size();
    const bool weighted = !g.has_unit_lengths();

    std::vector<std::vector<double>> dist(h);
    for (std::size_t a = 0; a < h; ++a) {
        dist[a] = sssp(g, pivots[a], weighted).dist;
    }

    // Region by nearest pivot, ties to the earlier-selected one.
    std::vector<std::size_t> region(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t best = 0;
        for (std::size_t a = 1; a < h; ++a) {
            if (dist[a][v] < dist[best][v]) {
                best = a;
            }
        }
        region[v] = best;
    }

    std::vector<std::vector<double>> s(h, std::vector<double>(n, 0.0));
    for (std::size_t a = 0; a < h; ++a) {
        for (std::size_t i = 0; i < n; ++i) {
            int count = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (region[j] == a && dist[a][j] <= dist[a][i] / 2.0) {
                    ++count;
                }
            }
            s[a][i] = count;
        }
    }
    return s;
}

bool xml_well_formed(const std::string& text, std::string* error) {
    const auto fail = [&](const std::string& why) {
        if (error != nullptr) {
            *error = why;
        }
        return false;
    };

    std::vector<std::string> stack;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != '<') {
            ++pos;
            continue;
        }
        const std::size_t close = text.find('>', pos);
        if (close == std::string::npos) {
            return fail("unterminated tag");
        }
        std::string tag = text.substr(pos + 1, close - pos - 1);
        pos = close + 1;

        if (tag.empty()) {
            return fail("empty tag");
        }
        if (tag.front() == '?' || tag.front() == '!') {
            continue;  // declaration or comment
        }
        if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) {
            return fail("unbalanced attribute quotes in <" + tag + ">");
        }

        if (tag.front() == '/') {
            const std::string name = tag.substr(1);
            if (stack.empty() || stack.back() != name) {
                return fail("mismatched closing tag </" + name + ">");
            }
            stack.pop_back();
            continue;
        }

        const bool self_closing = tag.back() == '/';
        if (self_closing) {
            tag.pop_back();
        }
        std::string name;
        for (char c : tag) {
            if (std::isspace(static_cast<unsigned char>(c))) {
                break;
            }
            name.push_back(c);
        }
        if (name.empty()) {
            return fail("nameless tag");
        }
        if (!self_closing) {
            stack.push_back(name);
        }
    }
    if (!stack.empty()) {
        return fail("unclosed tag <" + stack.back() + ">");
    }
    return true;
}

}  // namespace oracle
