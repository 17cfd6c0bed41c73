#pragma once

#include "draftval/cescin.hpp"
#include "draftval/core_model.hpp"
#include "draftval/numerics/hypothesis.hpp"
#include "draftval/numerics/smooth_curve.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace draftval {

using numerics::TestResult;

/// Per-player return over CSS for every metric.
struct PlayerDelta {
    int year = 0;
    std::string team;
    int selection = 0;
    int delta_rank = 0;
    std::array<double, 3> delta_metric{};

    double at(Metric m) const { return delta_metric[static_cast<std::size_t>(m)]; }
};

/// Realised deltas: metric minus css_curves[metric](css_rank).
std::vector<PlayerDelta> realized_deltas(std::span<const DraftClass> classes,
                                         std::span<const CssOrdering> orderings,
                                         const std::map<Metric, numerics::SmoothCurve>& css_curves);

/// Model-based deltas: surplus_curves[metric](delta_rank).
std::vector<PlayerDelta> model_deltas(std::span<const DraftClass> classes, std::span<const CssOrdering> orderings,
                                      const std::map<Metric, numerics::SmoothCurve>& surplus_curves);

struct TeamGain {
    std::string team;
    int picks = 0;
    std::array<double, 3> mean_gain{};

    double at(Metric m) const { return mean_gain[static_cast<std::size_t>(m)]; }
};

/// Mean delta per drafting team, sorted by team id.
std::vector<TeamGain> team_gains(std::span<const PlayerDelta> deltas);

/// Shapiro-Wilk over the team mean gains of one metric.
TestResult normality_check(std::span<const TeamGain> gains, Metric metric);

/// Teams whose mean gain lies outside mean +/- 3 sd of all team means.
std::vector<std::string> outlier_teams(std::span<const TeamGain> gains, Metric metric);

struct SplitYears {
    int early_first = 1998;
    int early_last = 2000;
    int late_first = 2001;
    int late_last = 2002;
};

struct SplitHalfResult {
    std::map<Metric, TestResult> by_metric;
    int teams_used = 0;
    /// Teams without picks in one of the halves.
    std::vector<std::string> excluded;
};

/// Pearson correlation over teams of early-half versus late-half mean gain.
/// Throws NumericError when fewer than 3 teams have picks in both halves.
SplitHalfResult split_half_correlation(std::span<const PlayerDelta> deltas, const SplitYears& split = {});

/// Extension diagnostic: shuffles players across teams (keeping each team's
/// pick count) and compares the between-team sum of squares of mean gains
/// with its permutation distribution. statistic is the observed sum of
/// squares; p_value = (1 + #{permuted >= observed}) / (1 + iterations).
TestResult team_permutation_test(std::span<const PlayerDelta> deltas, Metric metric, int iterations,
                                 std::uint64_t seed);

/// team,picks,mean_gain_toi,mean_gain_gp,mean_gain_gvt
std::string teams_to_csv(std::span<const TeamGain> gains);

} // namespace draftval
