#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gcolor/error.hpp"

namespace gcolor {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1.
///
/// Immutable once built. Edges are stored normalized (u < v) and sorted;
/// neighbors are kept in a CSR layout, each list sorted ascending.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Pairs are normalized to (min, max),
    /// duplicates collapse to one edge. Self-loops and endpoints >= n are
    /// rejected with InputError.
    Graph(std::size_t n, std::vector<Edge> edges) : n_(n)
    {
        for (auto& e : edges) {
            if (e.first == e.second)
                throw InputError("self-loop on vertex " + std::to_string(e.first));
            if (e.first >= n || e.second >= n)
                throw InputError("edge endpoint out of range: " + std::to_string(e.first) + " "
                                 + std::to_string(e.second) + " (n=" + std::to_string(n) + ")");
            if (e.first > e.second)
                std::swap(e.first, e.second);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);
        build_adjacency();
    }

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    std::span<const Edge> edges() const noexcept { return edges_; }

    std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

    std::span<const Vertex> neighbors(Vertex v) const noexcept
    {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }

    std::vector<std::size_t> degrees() const
    {
        std::vector<std::size_t> d(n_);
        for (Vertex v = 0; v < n_; ++v)
            d[v] = degree(v);
        return d;
    }

    std::size_t max_degree() const
    {
        std::size_t best = 0;
        for (Vertex v = 0; v < n_; ++v)
            best = std::max(best, degree(v));
        return best;
    }

    bool has_edge(Vertex u, Vertex v) const
    {
        if (u >= n_ || v >= n_)
            return false;
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void build_adjacency()
    {
        offsets_.assign(n_ + 1, 0);
        for (const auto& [u, v] : edges_) {
            ++offsets_[u + 1];
            ++offsets_[v + 1];
        }
        std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
        adjacency_.resize(2 * edges_.size());
        std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
        // edges_ is sorted: lower neighbors first, then higher, keeps lists ascending
        for (const auto& [u, v] : edges_)
            adjacency_[fill[v]++] = u;
        for (const auto& [u, v] : edges_)
            adjacency_[fill[u]++] = v;
    }

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> adjacency_;
};

/// Two-coloring by BFS; true iff the graph has no odd cycle.
inline bool is_bipartite(const Graph& g)
{
    std::vector<int> side(g.order(), -1);
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex w : g.neighbors(u)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if (side[w] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Number of triangles containing each edge, indexed like g.edges().
inline std::vector<std::size_t> edge_triangle_counts(const Graph& g)
{
    std::vector<std::size_t> counts;
    counts.reserve(g.size());
    for (const auto& [u, v] : g.edges()) {
        auto a = g.neighbors(u);
        auto b = g.neighbors(v);
        std::size_t common = 0;
        auto i = a.begin();
        auto j = b.begin();
        while (i != a.end() && j != b.end()) {
            if (*i < *j) {
                ++i;
            } else if (*j < *i) {
                ++j;
            } else {
                ++common;
                ++i;
                ++j;
            }
        }
        counts.push_back(common);
    }
    return counts;
}

/// Copy of g with degree-0 vertices removed and the rest relabeled
/// contiguously in their original order.
inline Graph drop_isolated(const Graph& g)
{
    std::vector<Vertex> relabel(g.order());
    Vertex next = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        relabel[v] = g.degree(v) > 0 ? next++ : Vertex(-1);
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (const auto& [u, v] : g.edges())
        edges.emplace_back(relabel[u], relabel[v]);
    return Graph(next, std::move(edges));
}

} // namespace gcolor
