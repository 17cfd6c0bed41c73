#pragma once

#include "draftval/cescin.hpp"
#include "draftval/core_model.hpp"
#include "draftval/draft_audit.hpp"
#include "draftval/numerics/loess.hpp"
#include "draftval/numerics/smooth_curve.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace draftval {

using numerics::LoessConfig;
using numerics::SmoothCurve;

/// Expected metric as a function of slot in one ordering, LOESS-smoothed
/// over the pooled classes on the grid 1..210. `group` restricts the pool
/// to one position group.
SmoothCurve expected_curve(std::span<const DraftClass> classes, std::span<const CssOrdering> orderings,
                           Ordering ordering, Metric metric, const LoessConfig& cfg,
                           std::optional<PositionGroup> group = std::nullopt);

/// Negative when a team took the player earlier than CSS ranked him.
inline int rank_differential(int selection, int css_rank) {
    return selection - css_rank;
}

/// Realised metric minus the curve's expectation at `rank`.
double metric_differential(const PlayerRecord& rec, Metric metric, const SmoothCurve& expected, int rank);

struct DifferentialPoint {
    int delta_rank = 0;
    double delta_metric = 0.0;
};

/// Which ordering's expectation a player's realised metric is compared to.
enum class ExpectationBasis { Css, Team };

/// One differential point per player. With the CSS basis the expectation is
/// `expected(css_rank)`, with the team basis `expected(selection)`; pass the
/// matching curve.
std::vector<DifferentialPoint> differential_points(std::span<const DraftClass> classes,
                                                   std::span<const CssOrdering> orderings, Metric metric,
                                                   const SmoothCurve& expected, ExpectationBasis basis,
                                                   std::optional<PositionGroup> group = std::nullopt);

struct DifferentialFit {
    SmoothCurve curve;
    /// Least-squares slope of the fitted values across the grid.
    double slope = 0.0;
    double value_at_zero = 0.0;
};

/// LOESS of delta_metric on delta_rank over the integer grid spanning the
/// observed delta_rank range. Needs at least 10 points with both negative and
/// positive delta_rank.
DifferentialFit fit_differential_curve(std::span<const DifferentialPoint> points, const LoessConfig& cfg);

/// (sum over delta<0 of f(delta) - sum over delta>0 of f(delta)) / N, with N
/// counting every selection. Positive when teams add value over CSS for a
/// negatively sloped f.
double average_gain(const SmoothCurve& f, std::span<const int> delta_ranks);

struct DollarConstants {
    double salary_per_game = 29300.0;
    double dollars_per_goal = 1'000'000.0 / 3.0;
    double minutes_per_game = 20.0;
    double picks_per_season = 7.0;

    void validate() const;
};

double to_dollars(double gain, Metric metric, const DollarConstants& dc = {});

struct GainEstimate {
    Metric metric = Metric::Toi;
    double per_pick = 0.0;
    double per_draft = 0.0;
    double dollars = 0.0;
};

GainEstimate make_gain_estimate(Metric metric, double per_pick, const DollarConstants& dc = {});

struct RankSignSplit {
    double positive_pct = 0.0;
    double negative_pct = 0.0;
    double zero_pct = 0.0;
};

RankSignSplit rank_sign_split(std::span<const int> delta_ranks);

struct ValuationConfig {
    LoessConfig loess;
    ExpectationBasis basis = ExpectationBasis::Css;
    DollarConstants dollars;
};

/// Everything the rank-differential analysis produces for one metric.
struct SurplusResult {
    Metric metric = Metric::Toi;
    SmoothCurve team_curve;
    SmoothCurve css_curve;
    std::vector<DifferentialPoint> points;
    DifferentialFit fit;
    GainEstimate gain;
    RankSignSplit split;
};

SurplusResult estimate_surplus(std::span<const DraftClass> classes, std::span<const CssOrdering> orderings,
                               Metric metric, const ValuationConfig& cfg,
                               std::optional<PositionGroup> group = std::nullopt);

/// 210 relative pick values, 1000 at pick 1, non-increasing.
class ValueChart {
public:
    static constexpr std::size_t kSize = kMaxSelection;

    ValueChart() = default;
    explicit ValueChart(std::array<int, kSize> values) : values_(values) {}

    int value(int selection) const { return values_.at(static_cast<std::size_t>(selection - 1)); }
    std::span<const int> values() const { return values_; }

    /// value(1) == 1000, non-increasing, all values >= 0.
    bool satisfies_invariants() const;

    bool operator==(const ValueChart&) const = default;

private:
    std::array<int, kSize> values_{};
};

/// Scales a non-increasing curve evaluated at 1..210 to 1000 at pick 1,
/// rounding half up and flooring negative values at 0.
ValueChart value_chart_from_curve(const SmoothCurve& monotone);

/// LOESS of TOI on selection over 1..210 followed by an antitonic fit of
/// the smoothed values. Throws NumericError("non-positive top value") if the
/// monotone fit at pick 1 is not positive.
ValueChart draft_value_chart(std::span<const DraftClass> classes, const LoessConfig& cfg);

std::string chart_to_csv(const ValueChart& chart);
std::string curve_to_csv(const SmoothCurve& curve);

} // namespace draftval
