#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gcolor/graph.hpp"

namespace gcolor {

using Color = std::uint32_t;

/// Row-major dense matrix; rows index vertices throughout the library.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Vertex -> color map with a color budget k. Entries lie in [0, k).
struct HardColoring {
    std::vector<Color> colors;
    std::size_t k = 1;

    HardColoring() = default;
    HardColoring(std::vector<Color> c, std::size_t budget) : colors(std::move(c)), k(budget)
    {
        if (k < 1)
            throw std::invalid_argument("color budget must be at least 1");
        for (Color c : colors)
            if (c >= k)
                throw std::invalid_argument("color " + std::to_string(c) + " outside budget "
                                            + std::to_string(k));
    }

    /// The unique 1-coloring of n vertices.
    static HardColoring uniform(std::size_t n) { return HardColoring(std::vector<Color>(n, 0), 1); }

    std::size_t size() const noexcept { return colors.size(); }

    /// 1 + the largest color used (0 for an empty coloring).
    std::size_t colors_used() const
    {
        std::size_t top = 0;
        for (Color c : colors)
            top = std::max<std::size_t>(top, c + 1);
        return top;
    }

    friend bool operator==(const HardColoring&, const HardColoring&) = default;
};

/// Row-stochastic n x k matrix of per-vertex color distributions.
struct SoftColoring {
    static constexpr double kRowTolerance = 1e-9;

    Matrix probs;

    SoftColoring() = default;
    explicit SoftColoring(Matrix p) : probs(std::move(p)) { validate(); }

    std::size_t order() const noexcept { return std::size_t(probs.rows()); }
    std::size_t colors() const noexcept { return std::size_t(probs.cols()); }

    /// Throws std::invalid_argument unless every row sums to 1 within
    /// kRowTolerance and every entry is in [0, 1]. Rows are never renormalized.
    void validate() const
    {
        for (Eigen::Index i = 0; i < probs.rows(); ++i) {
            double s = probs.row(i).sum();
            if (!(std::abs(s - 1.0) <= kRowTolerance))
                throw std::invalid_argument("soft coloring row " + std::to_string(i)
                                            + " does not sum to 1");
            if (probs.row(i).minCoeff() < 0.0 || probs.row(i).maxCoeff() > 1.0 + kRowTolerance)
                throw std::invalid_argument("soft coloring row " + std::to_string(i)
                                            + " has an entry outside [0,1]");
        }
    }

    /// One-hot embedding of a hard coloring.
    static SoftColoring one_hot(const HardColoring& c)
    {
        Matrix p = Matrix::Zero(Eigen::Index(c.size()), Eigen::Index(c.k));
        for (std::size_t i = 0; i < c.size(); ++i)
            p(Eigen::Index(i), c.colors[i]) = 1.0;
        return SoftColoring(std::move(p));
    }
};

/// Loss family selector. Edge weights:
///   standard        1
///   degree-power p  (deg(i)^p + deg(j)^p) / 2
///   triangle        1 + #triangles through the edge
struct LossFamily {
    enum class Kind { standard, degree_power, triangle };

    Kind kind = Kind::degree_power;
    unsigned power = 3;

    static LossFamily standard() { return {Kind::standard, 0}; }
    static LossFamily degree_power(unsigned p) { return {Kind::degree_power, p}; }
    static LossFamily triangle() { return {Kind::triangle, 0}; }

    std::string name() const
    {
        switch (kind) {
        case Kind::standard:
            return "standard";
        case Kind::degree_power:
            return "degree-power:" + std::to_string(power);
        case Kind::triangle:
            return "triangle";
        }
        return "?";
    }

    /// Accepts "standard", "triangle", "degree-power:<p>" and "p<p>".
    static LossFamily parse(const std::string& s)
    {
        if (s == "standard")
            return standard();
        if (s == "triangle")
            return triangle();
        std::string digits;
        if (s.rfind("degree-power:", 0) == 0)
            digits = s.substr(13);
        else if (s.size() > 1 && s[0] == 'p')
            digits = s.substr(1);
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos)
            return degree_power(unsigned(std::stoul(digits)));
        throw InputError("unknown loss '" + s + "'");
    }

    friend bool operator==(const LossFamily&, const LossFamily&) = default;
};

/// A loss family bound to a graph: one positive weight per edge, indexed
/// like g.edges().
struct LossSpec {
    LossFamily family;
    std::vector<double> edge_weights;

    static LossSpec build(const Graph& g, LossFamily family)
    {
        LossSpec spec{family, std::vector<double>(g.size(), 1.0)};
        auto edges = g.edges();
        switch (family.kind) {
        case LossFamily::Kind::standard:
            break;
        case LossFamily::Kind::degree_power: {
            auto power = [&](std::size_t deg) {
                double r = 1.0;
                for (unsigned t = 0; t < family.power; ++t)
                    r *= double(deg);
                return r;
            };
            for (std::size_t e = 0; e < edges.size(); ++e)
                spec.edge_weights[e] =
                    (power(g.degree(edges[e].first)) + power(g.degree(edges[e].second))) / 2.0;
            break;
        }
        case LossFamily::Kind::triangle: {
            auto tri = edge_triangle_counts(g);
            for (std::size_t e = 0; e < edges.size(); ++e)
                spec.edge_weights[e] = 1.0 + double(tri[e]);
            break;
        }
        }
        return spec;
    }
};

/// Number of monochromatic edges.
inline std::size_t loss_hard(const Graph& g, const HardColoring& c)
{
    if (c.size() != g.order())
        throw std::invalid_argument("coloring length " + std::to_string(c.size())
                                    + " does not match graph order " + std::to_string(g.order()));
    std::size_t bad = 0;
    for (const auto& [u, v] : g.edges())
        bad += c.colors[u] == c.colors[v];
    return bad;
}

inline bool is_proper(const Graph& g, const HardColoring& c) { return loss_hard(g, c) == 0; }

/// Weighted expected number of monochromatic edges: sum_e w_e <p_i, p_j>.
inline double loss_soft(const Graph& g, const SoftColoring& s, const LossSpec& spec)
{
    if (s.order() != g.order())
        throw std::invalid_argument("soft coloring has " + std::to_string(s.order())
                                    + " rows, graph order is " + std::to_string(g.order()));
    if (spec.edge_weights.size() != g.size())
        throw std::invalid_argument("loss spec was built for a different graph");
    s.validate();
    double total = 0.0;
    auto edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e)
        total += spec.edge_weights[e] * s.probs.row(edges[e].first).dot(s.probs.row(edges[e].second));
    return total;
}

/// Row-wise argmax, ties to the lowest color index.
inline HardColoring round_soft(const SoftColoring& s)
{
    std::vector<Color> colors(s.order());
    for (Eigen::Index i = 0; i < s.probs.rows(); ++i) {
        Eigen::Index best = 0;
        for (Eigen::Index j = 1; j < s.probs.cols(); ++j)
            if (s.probs(i, j) > s.probs(i, best))
                best = j;
        colors[std::size_t(i)] = Color(best);
    }
    return HardColoring(std::move(colors), std::max<std::size_t>(1, s.colors()));
}

/// Smallest positive integer k with 2 k ln(k) > d.
inline std::size_t k_d(double d)
{
    if (!(d > 0.0))
        throw std::invalid_argument("k_d needs a positive average degree");
    std::size_t k = 1;
    while (!(2.0 * double(k) * std::log(double(k)) > d))
        ++k;
    return k;
}

} // namespace gcolor
