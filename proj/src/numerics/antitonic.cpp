#include "draftval/numerics/antitonic.hpp"

#include "draftval/errors.hpp"

#include <algorithm>
#include <cmath>

namespace draftval::numerics {

std::vector<double> pava_nondecreasing(std::span<const double> y, std::span<const double> w) {
    if (y.size() != w.size())
        throw NumericError("pava: values and weights differ in length");

    struct Block {
        double level;
        double weight;
        std::size_t count;
    };
    std::vector<Block> blocks;
    blocks.reserve(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!(w[i] > 0.0))
            throw NumericError("pava: weights must be positive");
        blocks.push_back({y[i], w[i], 1});
        while (blocks.size() > 1 && blocks[blocks.size() - 2].level > blocks.back().level) {
            const Block top = blocks.back();
            blocks.pop_back();
            auto& prev = blocks.back();
            const double wsum = prev.weight + top.weight;
            prev.level = (prev.weight * prev.level + top.weight * top.level) / wsum;
            prev.weight = wsum;
            prev.count += top.count;
        }
    }

    std::vector<double> out;
    out.reserve(y.size());
    for (const auto& b : blocks)
        out.insert(out.end(), b.count, b.level);
    return out;
}

std::vector<WeightedPoint> aggregate_ties(std::span<const WeightedPoint> points) {
    std::vector<WeightedPoint> sorted(points.begin(), points.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const WeightedPoint& a, const WeightedPoint& b) { return a.x < b.x; });
    std::vector<WeightedPoint> out;
    for (const auto& p : sorted) {
        if (!out.empty() && out.back().x == p.x) {
            auto& q = out.back();
            const double wsum = q.w + p.w;
            q.y = (q.w * q.y + p.w * p.y) / wsum;
            q.w = wsum;
        } else {
            out.push_back(p);
        }
    }
    return out;
}

SmoothCurve antitonic_fit(std::span<const WeightedPoint> points) {
    for (const auto& p : points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw NumericError("antitonic_fit: non-finite observation");
        if (!(p.w > 0.0))
            throw NumericError("antitonic_fit: weights must be positive");
    }
    const auto agg = aggregate_ties(points);
    if (agg.size() < 2)
        throw NumericError("antitonic_fit: need at least 2 distinct x values");

    std::vector<double> grid, neg_y, w;
    grid.reserve(agg.size());
    neg_y.reserve(agg.size());
    w.reserve(agg.size());
    for (const auto& p : agg) {
        grid.push_back(p.x);
        neg_y.push_back(-p.y);
        w.push_back(p.w);
    }
    auto fitted = pava_nondecreasing(neg_y, w);
    for (auto& v : fitted)
        v = -v;
    return SmoothCurve(FitKind::Antitonic, std::move(grid), std::move(fitted));
}

} // namespace draftval::numerics
