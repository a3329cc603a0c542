#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gcolor {

struct Interval95 {
    double mean = 0.0;
    double halfwidth = 0.0;

    double lower() const { return mean - halfwidth; }
    double upper() const { return mean + halfwidth; }
};

/// Normal-approximation 95% interval: mean +- 1.96 s / sqrt(N), with the
/// Bessel-corrected sample standard deviation s.
inline Interval95 confidence_interval(const std::vector<double>& samples)
{
    if (samples.size() < 2)
        throw std::invalid_argument("confidence interval needs at least 2 samples");
    const double n = double(samples.size());
    double mean = 0.0;
    for (double x : samples)
        mean += x;
    mean /= n;
    double ss = 0.0;
    for (double x : samples)
        ss += (x - mean) * (x - mean);
    double s = std::sqrt(ss / (n - 1.0));
    return {mean, 1.96 * s / std::sqrt(n)};
}

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;

    double operator()(double x) const { return slope * x + intercept; }
};

/// Ordinary least squares line through (x, y) points.
inline LinearFit ols_fit(const std::vector<std::pair<double, double>>& points)
{
    if (points.size() < 2)
        throw std::invalid_argument("regression needs at least 2 points");
    const double n = double(points.size());
    double mx = 0.0, my = 0.0;
    for (auto [x, y] : points) {
        mx += x;
        my += y;
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (auto [x, y] : points) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0.0)
        throw std::invalid_argument("regression is degenerate: all x values are equal");
    double slope = sxy / sxx;
    return {slope, my - slope * mx};
}

struct Extrapolation {
    LinearFit fit;
    std::vector<double> predictions;
};

inline Extrapolation fit_and_extrapolate(const std::vector<std::pair<double, double>>& points,
                                         const std::vector<double>& targets)
{
    Extrapolation e{ols_fit(points), {}};
    for (double t : targets)
        e.predictions.push_back(e.fit(t));
    return e;
}

} // namespace gcolor
