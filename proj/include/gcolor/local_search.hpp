#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gcolor/coloring.hpp"
#include "gcolor/graph.hpp"
#include "gcolor/rng.hpp"

namespace gcolor {

/// Counters filled in by the local-search routines when a pointer is passed.
struct SearchStats {
    std::size_t discrete_calls = 0;
    std::size_t moves = 0;
};

/// Each vertex colored uniformly from [0, k).
inline HardColoring random_coloring(std::size_t n, std::size_t k, SearchRng& rng)
{
    std::vector<Color> colors(n);
    for (auto& c : colors)
        c = Color(rng.below(k));
    return HardColoring(std::move(colors), k);
}

/// Best-improvement 1-flip descent on the number of monochromatic edges.
///
/// Keeps, for every vertex, the count of neighbors holding each color and the
/// vertex's best achievable gain. Vertices with positive gain sit in buckets
/// indexed by gain, so each move costs O(deg * k) to apply and picking a
/// uniformly random best vertex is O(1). Buffers are reused across calls.
class DiscreteColorer {
public:
    explicit DiscreteColorer(const Graph& g) : g_(g) {}

    struct Result {
        HardColoring coloring;
        std::size_t loss = 0;
    };

    Result run(const HardColoring& init, std::size_t k, SearchRng& rng, SearchStats* stats = nullptr)
    {
        if (k < 1)
            throw std::invalid_argument("color budget must be at least 1");
        if (init.size() != g_.order())
            throw std::invalid_argument("initial coloring does not match graph order");
        if (init.colors_used() > k)
            throw std::invalid_argument("initial coloring uses more than k colors");
        if (stats)
            ++stats->discrete_calls;

        const std::size_t n = g_.order();
        k_ = k;
        colors_ = init.colors;
        counts_.assign(n * k, 0);
        std::size_t loss = 0;
        for (const auto& [u, v] : g_.edges()) {
            ++counts_[u * k + colors_[v]];
            ++counts_[v * k + colors_[u]];
            loss += colors_[u] == colors_[v];
        }

        buckets_.assign(g_.max_degree() + 1, {});
        bucket_of_.assign(n, 0);
        slot_.assign(n, 0);
        top_ = 0;
        for (Vertex v = 0; v < n; ++v)
            place(v, gain(v));

        while (true) {
            while (top_ > 0 && buckets_[top_].empty())
                --top_;
            if (top_ == 0)
                break;
            const auto& best = buckets_[top_];
            Vertex v = best[rng.below(best.size())];
            Color to = pick_color(v, rng);
            loss -= top_;
            recolor(v, to);
            if (stats)
                ++stats->moves;
        }
        return {HardColoring(colors_, k), loss};
    }

private:
    std::uint32_t count(Vertex v, Color c) const { return counts_[v * k_ + c]; }

    std::size_t gain(Vertex v) const
    {
        std::uint32_t own = count(v, colors_[v]);
        if (own == 0 || k_ < 2)
            return 0;
        std::uint32_t best = own;
        for (Color c = 0; c < k_; ++c)
            if (c != colors_[v])
                best = std::min(best, count(v, c));
        return own - best;
    }

    Color pick_color(Vertex v, SearchRng& rng)
    {
        std::uint32_t low = UINT32_MAX;
        for (Color c = 0; c < k_; ++c)
            if (c != colors_[v])
                low = std::min(low, count(v, c));
        tied_.clear();
        for (Color c = 0; c < k_; ++c)
            if (c != colors_[v] && count(v, c) == low)
                tied_.push_back(c);
        return tied_[rng.below(tied_.size())];
    }

    void place(Vertex v, std::size_t gain)
    {
        if (bucket_of_[v] == gain)
            return;
        if (bucket_of_[v] != 0) {
            auto& b = buckets_[bucket_of_[v]];
            Vertex last = b.back();
            b[slot_[v]] = last;
            slot_[last] = slot_[v];
            b.pop_back();
        }
        bucket_of_[v] = gain;
        if (gain != 0) {
            slot_[v] = buckets_[gain].size();
            buckets_[gain].push_back(v);
            top_ = std::max(top_, gain);
        }
    }

    void recolor(Vertex v, Color to)
    {
        Color from = colors_[v];
        colors_[v] = to;
        for (Vertex w : g_.neighbors(v)) {
            --counts_[w * k_ + from];
            ++counts_[w * k_ + to];
            place(w, gain(w));
        }
        place(v, gain(v));
    }

    const Graph& g_;
    std::size_t k_ = 1;
    std::vector<Color> colors_;
    std::vector<std::uint32_t> counts_;
    std::vector<std::vector<Vertex>> buckets_;
    std::vector<std::size_t> bucket_of_;
    std::vector<std::size_t> slot_;
    std::vector<Color> tied_;
    std::size_t top_ = 0;
};

/// Discrete-Color: greedy descent from `init` with budget k. Returns a
/// 1-flip local optimum.
inline HardColoring discrete_color(const Graph& g, std::size_t k, const HardColoring& init,
                                   SearchRng& rng, SearchStats* stats = nullptr)
{
    DiscreteColorer colorer(g);
    return colorer.run(init, k, rng, stats).coloring;
}

/// Full-Color: descend with budget 2 from the 1-coloring, then budget 3 from
/// that result, and so on up to k.
inline HardColoring full_color(const Graph& g, std::size_t k, SearchRng& rng,
                               SearchStats* stats = nullptr)
{
    if (k < 1)
        throw std::invalid_argument("color budget must be at least 1");
    DiscreteColorer colorer(g);
    HardColoring current = HardColoring::uniform(g.order());
    for (std::size_t j = 2; j <= k; ++j)
        current = colorer.run(current, j, rng, stats).coloring;
    current.k = k;
    return current;
}

namespace detail {

inline DiscreteColorer::Result triple_color(DiscreteColorer& colorer, const Graph& g, std::size_t k,
                                            DiscreteColorer::Result start, SearchRng& rng,
                                            SearchStats* stats)
{
    if (start.coloring.k == k)
        return start;
    std::array<SearchRng, 3> branch{rng.split(), rng.split(), rng.split()};
    std::size_t next = start.coloring.k + 1;
    DiscreteColorer::Result best;
    bool have = false;
    for (auto& stream : branch) {
        auto step = colorer.run(start.coloring, next, stream, stats);
        auto result = triple_color(colorer, g, k, std::move(step), stream, stats);
        if (!have || result.loss < best.loss) {
            best = std::move(result);
            have = true;
        }
    }
    return best;
}

} // namespace detail

/// Triple-Color: from a k'-coloring, three independent Discrete-Color calls
/// with budget k'+1, recurse on each, keep the best (first on ties). From the
/// 1-coloring this issues (3^k - 3) / 2 Discrete-Color calls.
inline HardColoring triple_color(const Graph& g, std::size_t k, const HardColoring& init,
                                 SearchRng& rng, SearchStats* stats = nullptr)
{
    if (k < 1)
        throw std::invalid_argument("color budget must be at least 1");
    if (init.k > k || init.colors_used() > k)
        throw std::invalid_argument("initial coloring uses more than k colors");
    DiscreteColorer colorer(g);
    DiscreteColorer::Result start{init, loss_hard(g, init)};
    return detail::triple_color(colorer, g, k, std::move(start), rng, stats).coloring;
}

inline HardColoring triple_color(const Graph& g, std::size_t k, SearchRng& rng,
                                 SearchStats* stats = nullptr)
{
    return triple_color(g, k, HardColoring::uniform(g.order()), rng, stats);
}

} // namespace gcolor
