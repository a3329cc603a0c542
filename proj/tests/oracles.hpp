#pragma once

// Independent reference computations shared by the unit and acceptance tests.

#include <functional>
#include <vector>

#include "gcolor/coloring.hpp"
#include "gcolor/graph.hpp"
#include "gcolor/rng.hpp"

namespace oracle {

using namespace gcolor;

/// Expected number of monochromatic edges by summing over all k^n hard
/// colorings, each weighted by its probability under independent rows.
inline double brute_force_soft_loss(const Graph& g, const Matrix& p)
{
    const std::size_t n = g.order(), k = std::size_t(p.cols());
    std::vector<Color> c(n, 0);
    double total = 0.0;
    while (true) {
        double prob = 1.0;
        for (std::size_t i = 0; i < n; ++i)
            prob *= p(Eigen::Index(i), c[i]);
        std::size_t mono = 0;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (g.has_edge(Vertex(u), Vertex(v)) && c[u] == c[v])
                    ++mono;
        total += prob * double(mono);
        std::size_t i = 0;
        while (i < n && ++c[i] == k)
            c[i++] = 0;
        if (i == n)
            break;
    }
    return total;
}

/// Every connected labeled graph on n vertices, via edge bitmasks.
inline void for_each_connected_graph(std::size_t n, const std::function<void(const Graph&)>& visit)
{
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    const std::size_t masks = std::size_t(1) << pairs.size();
    for (std::size_t mask = 0; mask < masks; ++mask) {
        std::vector<Edge> edges;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if (mask >> b & 1)
                edges.push_back(pairs[b]);
        // union-find connectivity check
        std::vector<std::size_t> parent(n);
        for (std::size_t i = 0; i < n; ++i)
            parent[i] = i;
        std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
            return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        std::size_t comps = n;
        for (const auto& [u, v] : edges) {
            auto a = find(u), b = find(v);
            if (a != b) {
                parent[a] = b;
                --comps;
            }
        }
        if (comps == 1)
            visit(Graph(n, std::move(edges)));
    }
}

/// Random row-stochastic matrix with strictly positive entries.
inline Matrix random_stochastic(std::size_t n, std::size_t k, SearchRng& rng)
{
    Matrix p = Matrix::Zero(Eigen::Index(n), Eigen::Index(k));
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
        for (Eigen::Index j = 0; j < p.cols(); ++j)
            p(i, j) = 0.05 + rng.uniform();
        p.row(i) /= p.row(i).sum();
    }
    return p;
}

/// True iff no single-vertex recoloring within budget k strictly lowers the
/// number of monochromatic edges.
inline bool is_one_flip_optimal(const Graph& g, const HardColoring& c, std::size_t k)
{
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<std::size_t> count(k, 0);
        for (Vertex w : g.neighbors(v))
            ++count[c.colors[w]];
        for (Color x = 0; x < k; ++x)
            if (count[x] < count[c.colors[v]])
                return false;
    }
    return true;
}

inline Graph petersen()
{
    return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                      {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

} // namespace oracle
