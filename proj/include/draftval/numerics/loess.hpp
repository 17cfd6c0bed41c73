#pragma once

#include "draftval/numerics/smooth_curve.hpp"

#include <span>
#include <vector>

namespace draftval::numerics {

struct LoessConfig {
    /// Fraction of the points used in every local fit, in (0, 1].
    double span = 0.5;
    /// Local polynomial degree, 0 or 1.
    int degree = 1;

    void validate() const;
};

/// Local weighted least squares without robustness iterations.
///
/// At every grid point x0 the q = ceil(span * n) points nearest to x0 get
/// tricube weights (1 - (d/dmax)^3)^3, multiplied by the point's own weight,
/// where dmax is the distance to the q-th nearest point (ties resolved by
/// input order). When all q distances are equal the tricube factor is
/// replaced by 1. If every positively weighted neighbour shares the same x
/// the local weighted mean is used instead of the linear fit.
///
/// Throws NumericError when there are fewer than degree + 2 distinct x
/// values or span * n < degree + 1.
SmoothCurve loess_fit(std::span<const WeightedPoint> points, const LoessConfig& cfg,
                      std::vector<double> grid);

/// Fitted value at a single location; the building block of loess_fit.
double loess_at(std::span<const WeightedPoint> points, const LoessConfig& cfg, double x0);

} // namespace draftval::numerics
