#pragma once

#include <span>

namespace draftval::numerics {

struct TestResult {
    double statistic = 0.0;
    double p_value = 1.0;
};

/// Shapiro-Wilk W with Royston's (1995) coefficient approximation and
/// p-value transform. Requires 3 <= n <= 5000 and a non-constant sample;
/// throws NumericError otherwise.
TestResult shapiro_wilk(std::span<const double> sample);

/// Sample correlation r with a two-sided p-value from
/// t = r sqrt((n-2)/(1-r^2)) on n-2 degrees of freedom.
TestResult pearson(std::span<const double> x, std::span<const double> y);

} // namespace draftval::numerics
