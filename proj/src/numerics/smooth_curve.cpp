#include "draftval/numerics/smooth_curve.hpp"

#include "draftval/errors.hpp"

#include <algorithm>
#include <cmath>

namespace draftval::numerics {

SmoothCurve::SmoothCurve(FitKind kind, std::vector<double> grid, std::vector<double> values)
    : kind_(kind), grid_(std::move(grid)), values_(std::move(values)) {
    if (grid_.size() != values_.size())
        throw NumericError("SmoothCurve: grid and values differ in length");
    if (grid_.empty())
        throw NumericError("SmoothCurve: empty grid");
    for (std::size_t i = 1; i < grid_.size(); ++i)
        if (!(grid_[i] > grid_[i - 1]))
            throw NumericError("SmoothCurve: grid must be strictly ascending");
}

double SmoothCurve::operator()(double x) const {
    if (x <= grid_.front())
        return values_.front();
    if (x >= grid_.back())
        return values_.back();
    // First grid point strictly greater than x; x lies in [grid[hi-1], grid[hi]).
    const auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
    const auto hi = static_cast<std::size_t>(it - grid_.begin());
    const auto lo = hi - 1;
    if (kind_ == FitKind::Antitonic || x == grid_[lo])
        return values_[lo];
    const double t = (x - grid_[lo]) / (grid_[hi] - grid_[lo]);
    return values_[lo] + t * (values_[hi] - values_[lo]);
}

std::string_view to_string(FitKind k) {
    return k == FitKind::Loess ? "loess" : "antitonic";
}

std::vector<double> integer_grid(int lo, int hi) {
    std::vector<double> g;
    for (int k = lo; k <= hi; ++k)
        g.push_back(static_cast<double>(k));
    return g;
}

} // namespace draftval::numerics
