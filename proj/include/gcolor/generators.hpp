#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "gcolor/error.hpp"
#include "gcolor/graph.hpp"
#include "gcolor/planarity.hpp"
#include "gcolor/rng.hpp"

namespace gcolor {

/// G(n, p) with p = d / (n - 1): every pair is an edge independently.
inline Graph gen_erdos_renyi(std::size_t n, double d, std::uint64_t seed)
{
    if (n < 1)
        throw InputError("Erdos-Renyi graph needs n >= 1");
    if (d < 0.0 || d > double(n - 1))
        throw InputError("average degree must lie in [0, n-1]");
    double p = n > 1 ? d / double(n - 1) : 0.0;
    SearchRng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.uniform() < p)
                edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

namespace detail {

// Pairing model: shuffle the r*n stubs and pair them; bad pairs (loops,
// repeats) go back into the pool and are re-paired. Restarts from scratch if
// the leftover stubs admit no valid pair.
inline bool try_pairing(std::size_t n, std::size_t r, SearchRng& rng, std::vector<Edge>& out)
{
    std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
    out.clear();
    std::vector<Vertex> stubs;
    stubs.reserve(n * r);
    for (Vertex v = 0; v < n; ++v)
        for (std::size_t t = 0; t < r; ++t)
            stubs.push_back(v);
    while (!stubs.empty()) {
        std::shuffle(stubs.begin(), stubs.end(), rng.engine());
        std::vector<std::size_t> leftover(n, 0);
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            Vertex a = std::min(stubs[i], stubs[i + 1]);
            Vertex b = std::max(stubs[i], stubs[i + 1]);
            if (a != b && !present[a][b]) {
                present[a][b] = true;
                out.emplace_back(a, b);
            } else {
                ++leftover[a];
                ++leftover[b];
            }
        }
        std::vector<Vertex> pending;
        for (Vertex v = 0; v < n; ++v)
            if (leftover[v])
                pending.push_back(v);
        bool suitable = pending.empty();
        for (std::size_t i = 0; i < pending.size() && !suitable; ++i)
            for (std::size_t j = i + 1; j < pending.size() && !suitable; ++j)
                suitable = !present[pending[i]][pending[j]];
        if (!suitable)
            return false;
        stubs.clear();
        for (Vertex v : pending)
            for (std::size_t t = 0; t < leftover[v]; ++t)
                stubs.push_back(v);
    }
    return true;
}

inline Graph complement(const Graph& g)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v))
                edges.emplace_back(u, v);
    return Graph(g.order(), std::move(edges));
}

} // namespace detail

/// Random r-regular simple graph on n vertices. Degrees above (n-1)/2 are
/// produced as complements of (n-1-r)-regular graphs.
inline Graph gen_regular(std::size_t n, std::size_t r, std::uint64_t seed)
{
    if (r >= n)
        throw InputError("regular graph needs r < n");
    if ((n * r) % 2 != 0)
        throw InputError("regular graph needs n*r even");
    if (2 * r > n - 1)
        return detail::complement(gen_regular(n, n - 1 - r, seed));
    SearchRng rng(seed);
    std::vector<Edge> edges;
    while (!detail::try_pairing(n, r, rng, edges)) {
    }
    return Graph(n, std::move(edges));
}

struct Cycle {
    std::size_t n;
};
struct Complete {
    std::size_t n;
};
struct Grid {
    std::vector<std::size_t> dims;
};
/// Brick-wall hexagonal lattice with `rows` x `cols` hexagons.
struct HexLattice {
    std::size_t rows, cols;
};
/// Triangular lattice with `rows` x `cols` triangles.
struct TriLattice {
    std::size_t rows, cols;
};

using FamilySpec = std::variant<Cycle, Complete, Grid, HexLattice, TriLattice>;

namespace detail {

inline Graph grid_graph(const std::vector<std::size_t>& dims)
{
    std::size_t n = 1;
    for (auto a : dims)
        n *= a;
    std::vector<Edge> edges;
    std::size_t stride = 1;
    for (std::size_t axis = 0; axis < dims.size(); ++axis) {
        for (std::size_t v = 0; v < n; ++v) {
            std::size_t coord = (v / stride) % dims[axis];
            if (coord + 1 < dims[axis])
                edges.emplace_back(Vertex(v), Vertex(v + stride));
        }
        stride *= dims[axis];
    }
    return Graph(n, std::move(edges));
}

inline Graph hex_lattice(std::size_t m, std::size_t q)
{
    // Nodes (i, j): column i in [0, q], row j in [0, 2m+1]. Two corner nodes
    // of degree one are dropped, leaving (2m+2)(q+1) - 2 nodes.
    std::size_t rows = 2 * m + 2;
    std::size_t cols = q + 1;
    auto id = [&](std::size_t i, std::size_t j) { return i * rows + j; };
    std::vector<Edge> raw;
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j + 1 < rows; ++j)
            raw.emplace_back(Vertex(id(i, j)), Vertex(id(i, j + 1)));
    for (std::size_t i = 0; i + 1 < cols; ++i)
        for (std::size_t j = 0; j < rows; ++j)
            if (i % 2 == j % 2)
                raw.emplace_back(Vertex(id(i, j)), Vertex(id(i + 1, j)));
    std::size_t drop_a = id(0, rows - 1);
    std::size_t drop_b = id(q, (rows - 1) * (q % 2));
    std::vector<Vertex> relabel(rows * cols);
    Vertex next = 0;
    for (std::size_t v = 0; v < rows * cols; ++v)
        relabel[v] = (v == drop_a || v == drop_b) ? Vertex(-1) : next++;
    std::vector<Edge> edges;
    for (auto [u, v] : raw)
        if (relabel[u] != Vertex(-1) && relabel[v] != Vertex(-1))
            edges.emplace_back(relabel[u], relabel[v]);
    return Graph(next, std::move(edges));
}

inline Graph tri_lattice(std::size_t rows, std::size_t cols)
{
    // (rows+1) x (cols/2+1) point grid plus one diagonal per unit square,
    // orientation alternating with the row.
    std::size_t r = rows + 1;
    std::size_t c = cols / 2 + 1;
    auto id = [&](std::size_t i, std::size_t j) { return Vertex(i * c + j); };
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            if (j + 1 < c)
                edges.emplace_back(id(i, j), id(i, j + 1));
            if (i + 1 < r)
                edges.emplace_back(id(i, j), id(i + 1, j));
            if (i + 1 < r && j + 1 < c) {
                if (i % 2 == 0)
                    edges.emplace_back(id(i, j), id(i + 1, j + 1));
                else
                    edges.emplace_back(id(i, j + 1), id(i + 1, j));
            }
        }
    return Graph(r * c, std::move(edges));
}

} // namespace detail

inline void validate(const FamilySpec& spec)
{
    auto positive = [](std::size_t x, const char* what) {
        if (x < 1)
            throw InputError(std::string(what) + " must be >= 1");
    };
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Cycle>) {
                if (s.n < 3)
                    throw InputError("cycle needs n >= 3");
            } else if constexpr (std::is_same_v<T, Complete>) {
                positive(s.n, "complete graph order");
            } else if constexpr (std::is_same_v<T, Grid>) {
                if (s.dims.empty())
                    throw InputError("grid needs at least one dimension");
                for (auto a : s.dims)
                    positive(a, "grid dimension");
            } else {
                positive(s.rows, "lattice rows");
                positive(s.cols, "lattice columns");
            }
        },
        spec);
}

inline Graph gen_family(const FamilySpec& spec)
{
    validate(spec);
    return std::visit(
        [](const auto& s) -> Graph {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Cycle>) {
                std::vector<Edge> edges;
                for (Vertex v = 0; v < s.n; ++v)
                    edges.emplace_back(v, Vertex((v + 1) % s.n));
                return Graph(s.n, std::move(edges));
            } else if constexpr (std::is_same_v<T, Complete>) {
                std::vector<Edge> edges;
                for (Vertex u = 0; u < s.n; ++u)
                    for (Vertex v = u + 1; v < s.n; ++v)
                        edges.emplace_back(u, v);
                return Graph(s.n, std::move(edges));
            } else if constexpr (std::is_same_v<T, Grid>) {
                return detail::grid_graph(s.dims);
            } else if constexpr (std::is_same_v<T, HexLattice>) {
                return detail::hex_lattice(s.rows, s.cols);
            } else {
                return detail::tri_lattice(s.rows, s.cols);
            }
        },
        spec);
}

namespace detail {

// Shared driver for the two greedy generators: shuffle the remaining
// non-edges, add the first one `accept` allows, repeat until none is
// accepted. A rejected pair stays rejected for good (both acceptance rules
// are monotone under adding edges), so it is dropped from the pool.
template <class Accept, class Done>
Graph greedy_fill(std::size_t n, std::uint64_t seed, Accept accept, Done done)
{
    SearchRng rng(seed);
    std::vector<Edge> pool;
    pool.reserve(n * (n - 1) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pool.emplace_back(u, v);
    std::vector<Edge> edges;
    while (!pool.empty() && !done(edges)) {
        std::shuffle(pool.begin(), pool.end(), rng.engine());
        std::size_t i = 0;
        bool added = false;
        for (; i < pool.size(); ++i) {
            if (accept(edges, pool[i])) {
                edges.push_back(pool[i]);
                added = true;
                ++i;
                break;
            }
        }
        // pool[0, i) were rejected, except the accepted pool[i-1]
        pool.erase(pool.begin(), pool.begin() + std::ptrdiff_t(i));
        if (!added)
            break;
    }
    return Graph(n, std::move(edges));
}

} // namespace detail

/// Random maximal planar graph: repeatedly add the first planarity-preserving
/// pair of a freshly shuffled non-edge list. Ends with 3n - 6 edges.
inline Graph gen_max_planar(std::size_t n, std::uint64_t seed)
{
    if (n < 3)
        throw InputError("maximal planar graph needs n >= 3");
    std::size_t full = 3 * n - 6;
    return detail::greedy_fill(
        n, seed,
        [n](const std::vector<Edge>& edges, Edge candidate) {
            std::vector<Edge> trial(edges);
            trial.push_back(candidate);
            return is_planar(Graph(n, std::move(trial)));
        },
        [full](const std::vector<Edge>& edges) { return edges.size() >= full; });
}

/// Nonnegative degree targets, one per vertex.
struct DegreeSequence {
    std::vector<std::size_t> values;

    void validate() const
    {
        std::size_t total = 0;
        for (auto d : values) {
            if (d >= values.size())
                throw InputError("degree " + std::to_string(d) + " is not below the vertex count");
            total += d;
        }
        if (total % 2 != 0)
            throw InputError("degree sum must be even");
    }
};

/// Greedy "replica" of a degree sequence: add shuffled non-edges while the
/// sorted degree sequence stays entrywise <= the sorted target.
inline Graph gen_replica(const DegreeSequence& target, std::uint64_t seed)
{
    target.validate();
    std::size_t n = target.values.size();
    std::vector<std::size_t> sorted_target = target.values;
    std::sort(sorted_target.begin(), sorted_target.end(), std::greater<>());
    std::size_t target_edges = std::accumulate(sorted_target.begin(), sorted_target.end(), std::size_t(0)) / 2;
    std::vector<std::size_t> degree(n, 0);
    std::size_t accepted = 0;
    std::vector<std::size_t> scratch(n);
    return detail::greedy_fill(
        n, seed,
        [&](const std::vector<Edge>& edges, Edge candidate) {
            // keep `degree` in sync with edges accepted since the last call
            for (; accepted < edges.size(); ++accepted) {
                ++degree[edges[accepted].first];
                ++degree[edges[accepted].second];
            }
            scratch = degree;
            ++scratch[candidate.first];
            ++scratch[candidate.second];
            std::sort(scratch.begin(), scratch.end(), std::greater<>());
            for (std::size_t i = 0; i < n; ++i)
                if (scratch[i] > sorted_target[i])
                    return false;
            return true;
        },
        [target_edges](const std::vector<Edge>& edges) { return edges.size() >= target_edges; });
}

} // namespace gcolor
