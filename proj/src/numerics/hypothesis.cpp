#include "draftval/numerics/hypothesis.hpp"

#include "draftval/errors.hpp"

#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace draftval::numerics {

namespace {

// c[0] + c[1] x + c[2] x^2 + ...
template <std::size_t N>
double poly(const std::array<double, N>& c, double x) {
    double r = 0.0;
    for (std::size_t i = N; i-- > 0;)
        r = r * x + c[i];
    return r;
}

// Royston (1995) coefficients a_1..a_{n/2} for the upper half of the sample.
std::vector<double> royston_coefficients(std::size_t n) {
    constexpr std::array<double, 6> c1{0.0, 0.221157, -0.147981, -2.07119, 4.434685, -2.706056};
    constexpr std::array<double, 6> c2{0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633};

    const std::size_t half = n / 2;
    std::vector<double> a(half);
    if (n == 3) {
        a[0] = std::sqrt(0.5);
        return a;
    }

    const boost::math::normal_distribution<double> std_normal;
    const double an = static_cast<double>(n);
    std::vector<double> m(half);
    double summ2 = 0.0;
    for (std::size_t i = 0; i < half; ++i) {
        m[i] = boost::math::quantile(std_normal, (static_cast<double>(i + 1) - 0.375) / (an + 0.25));
        summ2 += m[i] * m[i];
    }
    summ2 *= 2.0;
    const double ssumm2 = std::sqrt(summ2);
    const double rsn = 1.0 / std::sqrt(an);
    const double a1 = poly(c1, rsn) - m[0] / ssumm2;

    std::size_t first_scaled;
    double fac;
    if (n > 5) {
        const double a2 = -m[1] / ssumm2 + poly(c2, rsn);
        fac = std::sqrt((summ2 - 2.0 * m[0] * m[0] - 2.0 * m[1] * m[1]) /
                        (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2));
        a[1] = a2;
        first_scaled = 2;
    } else {
        fac = std::sqrt((summ2 - 2.0 * m[0] * m[0]) / (1.0 - 2.0 * a1 * a1));
        first_scaled = 1;
    }
    a[0] = a1;
    for (std::size_t i = first_scaled; i < half; ++i)
        a[i] = -m[i] / fac;
    return a;
}

double shapiro_wilk_p(double w, std::size_t n) {
    constexpr std::array<double, 2> g{-2.273, 0.459};
    constexpr std::array<double, 4> c3{0.544, -0.39978, 0.025054, -6.714e-4};
    constexpr std::array<double, 4> c4{1.3822, -0.77857, 0.062767, -0.0020322};
    constexpr std::array<double, 4> c5{-1.5861, -0.31082, -0.083751, 0.0038915};
    constexpr std::array<double, 3> c6{-0.4803, -0.082676, 0.0030302};

    if (n == 3) {
        constexpr double six_over_pi = 1.90985931710274;
        constexpr double pi_over_3 = 1.04719755119660;
        return std::clamp(six_over_pi * (std::asin(std::sqrt(w)) - pi_over_3), 0.0, 1.0);
    }

    const double w1 = 1.0 - w;
    if (w1 <= 0.0)
        return 1.0;
    const double an = static_cast<double>(n);
    double y = std::log(w1);
    double mean, sd;
    if (n <= 11) {
        const double gamma = poly(g, an);
        if (y >= gamma)
            return 1e-99;
        y = -std::log(gamma - y);
        mean = poly(c3, an);
        sd = std::exp(poly(c4, an));
    } else {
        const double ln_n = std::log(an);
        mean = poly(c5, ln_n);
        sd = std::exp(poly(c6, ln_n));
    }
    const boost::math::normal_distribution<double> dist(mean, sd);
    return std::clamp(boost::math::cdf(boost::math::complement(dist, y)), 0.0, 1.0);
}

} // namespace

TestResult shapiro_wilk(std::span<const double> sample) {
    const std::size_t n = sample.size();
    if (n < 3 || n > 5000)
        throw NumericError("shapiro_wilk: sample size " + std::to_string(n) + " outside 3..5000");
    std::vector<double> x(sample.begin(), sample.end());
    std::sort(x.begin(), x.end());
    for (double v : x)
        if (!std::isfinite(v))
            throw NumericError("shapiro_wilk: non-finite value");
    if (x.front() == x.back())
        throw NumericError("shapiro_wilk: degenerate sample (zero variance)");

    const auto half_coef = royston_coefficients(n);
    // Full antisymmetric coefficient vector aligned with the sorted sample.
    std::vector<double> a(n, 0.0);
    for (std::size_t i = 0; i < half_coef.size(); ++i) {
        a[i] = -half_coef[i];
        a[n - 1 - i] = half_coef[i];
    }

    // W is the squared correlation between the coefficients and the sorted
    // sample; working on range-scaled data keeps the sums well conditioned.
    const double range = x.back() - x.front();
    const double an = static_cast<double>(n);
    double xmean = 0.0, amean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        xmean += x[i] / range;
        amean += a[i];
    }
    xmean /= an;
    amean /= an;
    double ssa = 0.0, ssx = 0.0, sax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double da = a[i] - amean;
        const double dx = x[i] / range - xmean;
        ssa += da * da;
        ssx += dx * dx;
        sax += da * dx;
    }
    const double ssassx = std::sqrt(ssa * ssx);
    const double w1 = (ssassx - sax) * (ssassx + sax) / (ssa * ssx);
    const double w = std::min(1.0, 1.0 - w1);
    return {w, shapiro_wilk_p(w, n)};
}

TestResult pearson(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (y.size() != n)
        throw NumericError("pearson: vectors differ in length");
    if (n < 3)
        throw NumericError("pearson: need at least 3 pairs");
    const double an = static_cast<double>(n);
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / an;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / an;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (!(sxx > 0.0) || !(syy > 0.0))
        throw NumericError("pearson: zero variance in an input vector");
    const double r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
    if (std::abs(r) == 1.0)
        return {r, 0.0};
    const double df = an - 2.0;
    const double t = r * std::sqrt(df / (1.0 - r * r));
    const boost::math::students_t_distribution<double> dist(df);
    const double p = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
    return {r, std::clamp(p, 0.0, 1.0)};
}

} // namespace draftval::numerics
