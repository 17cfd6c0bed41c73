#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace draftval::numerics {

enum class FitKind { Loess, Antitonic };

/// One observation for a weighted fit.
struct WeightedPoint {
    double x = 0.0;
    double y = 0.0;
    double w = 1.0;
};

/// Fitted values on an ascending grid. Between grid points a LOESS curve
/// interpolates linearly; an antitonic curve holds the level of the nearest
/// grid point to the left. Outside the grid the end values are held.
class SmoothCurve {
public:
    SmoothCurve() = default;
    SmoothCurve(FitKind kind, std::vector<double> grid, std::vector<double> values);

    FitKind kind() const { return kind_; }
    std::span<const double> grid() const { return grid_; }
    std::span<const double> values() const { return values_; }
    std::size_t size() const { return grid_.size(); }
    bool empty() const { return grid_.empty(); }

    double operator()(double x) const;

private:
    FitKind kind_ = FitKind::Loess;
    std::vector<double> grid_;
    std::vector<double> values_;
};

std::string_view to_string(FitKind k);

/// Integer grid lo, lo+1, ..., hi.
std::vector<double> integer_grid(int lo, int hi);

} // namespace draftval::numerics
