#include "draftval/numerics/loess.hpp"

#include "draftval/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace draftval::numerics {

namespace {

double tricube(double u) {
    const double t = 1.0 - u * u * u;
    return t * t * t;
}

std::size_t neighbourhood_size(std::size_t n, const LoessConfig& cfg) {
    const double q = std::ceil(cfg.span * static_cast<double>(n) - 1e-12);
    return std::clamp(static_cast<std::size_t>(q), std::size_t{1}, n);
}

void check_design(std::span<const WeightedPoint> points, const LoessConfig& cfg) {
    cfg.validate();
    std::set<double> distinct;
    for (const auto& p : points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw NumericError("loess: non-finite observation");
        if (!(p.w > 0.0))
            throw NumericError("loess: weights must be positive");
        distinct.insert(p.x);
    }
    const auto need = static_cast<std::size_t>(cfg.degree + 2);
    if (distinct.size() < need)
        throw NumericError("loess: need at least " + std::to_string(need) + " distinct x values, got " +
                           std::to_string(distinct.size()));
    if (cfg.span * static_cast<double>(points.size()) < cfg.degree + 1)
        throw NumericError("loess: span * n must be at least degree + 1");
}

} // namespace

void LoessConfig::validate() const {
    if (!(span > 0.0 && span <= 1.0))
        throw ConfigError("loess span must lie in (0, 1]");
    if (degree != 0 && degree != 1)
        throw ConfigError("loess degree must be 0 or 1");
}

namespace {

double fit_at(std::span<const WeightedPoint> points, const LoessConfig& cfg, double x0) {
    const std::size_t n = points.size();
    const std::size_t q = neighbourhood_size(n, cfg);

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    auto dist = [&](std::size_t i) { return std::abs(points[i].x - x0); };
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(q), idx.end(),
                      [&](std::size_t a, std::size_t b) {
                          const double da = dist(a), db = dist(b);
                          return da != db ? da < db : a < b;
                      });
    idx.resize(q);

    const double dmax = dist(idx.back());
    const bool uniform = dist(idx.front()) == dmax;

    double sw = 0.0, sx = 0.0, sy = 0.0;
    std::vector<double> w(q);
    for (std::size_t k = 0; k < q; ++k) {
        const auto& p = points[idx[k]];
        w[k] = p.w * (uniform ? 1.0 : tricube(dist(idx[k]) / dmax));
        sw += w[k];
        sx += w[k] * p.x;
        sy += w[k] * p.y;
    }
    const double xbar = sx / sw;
    const double ybar = sy / sw;
    if (cfg.degree == 0)
        return ybar;

    double first_x = 0.0;
    bool seen = false, spread = false;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t k = 0; k < q; ++k) {
        if (w[k] <= 0.0)
            continue;
        const auto& p = points[idx[k]];
        if (!seen) {
            first_x = p.x;
            seen = true;
        } else if (p.x != first_x) {
            spread = true;
        }
        const double dx = p.x - xbar;
        sxx += w[k] * dx * dx;
        sxy += w[k] * dx * (p.y - ybar);
    }
    if (!spread || sxx <= 0.0)
        return ybar;
    return ybar + (sxy / sxx) * (x0 - xbar);
}

} // namespace

double loess_at(std::span<const WeightedPoint> points, const LoessConfig& cfg, double x0) {
    check_design(points, cfg);
    return fit_at(points, cfg, x0);
}

SmoothCurve loess_fit(std::span<const WeightedPoint> points, const LoessConfig& cfg,
                      std::vector<double> grid) {
    check_design(points, cfg);
    std::vector<double> values(grid.size());
    for (std::size_t g = 0; g < grid.size(); ++g)
        values[g] = fit_at(points, cfg, grid[g]);
    return SmoothCurve(FitKind::Loess, std::move(grid), std::move(values));
}

} // namespace draftval::numerics
