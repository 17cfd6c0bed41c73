#pragma once

#include "draftval/numerics/smooth_curve.hpp"

#include <span>
#include <vector>

namespace draftval::numerics {

/// Weighted pool-adjacent-violators: the non-decreasing vector m minimising
/// sum w_i (y_i - m_i)^2. `w` must be positive and the same length as `y`.
std::vector<double> pava_nondecreasing(std::span<const double> y, std::span<const double> w);

/// Points sharing an x collapse to one point: summed weight, weighted-mean y.
/// The result is sorted by x.
std::vector<WeightedPoint> aggregate_ties(std::span<const WeightedPoint> points);

/// Weighted least-squares non-increasing fit (PAVA on the negated data).
/// The curve's grid is the set of distinct x values. Throws NumericError
/// with fewer than two distinct x values.
SmoothCurve antitonic_fit(std::span<const WeightedPoint> points);

} // namespace draftval::numerics
