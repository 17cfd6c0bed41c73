#include "draftval/team_analysis.hpp"

#include "draftval/errors.hpp"
#include "draftval/valuation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace draftval {

namespace {

template <typename DeltaFn>
std::vector<PlayerDelta> build_deltas(std::span<const DraftClass> classes, std::span<const CssOrdering> orderings,
                                      DeltaFn&& fn) {
    if (classes.size() != orderings.size())
        throw DataError("one CSS ordering per draft class is required");
    std::vector<PlayerDelta> out;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (std::size_t i = 0; i < classes[c].size(); ++i) {
            const auto& r = classes[c][i];
            PlayerDelta d;
            d.year = r.year;
            d.team = r.team;
            d.selection = r.selection;
            const int css_rank = orderings[c].css_rank.at(i);
            d.delta_rank = rank_differential(r.selection, css_rank);
            for (Metric m : kAllMetrics)
                d.delta_metric[static_cast<std::size_t>(m)] = fn(r, m, css_rank, d.delta_rank);
            out.push_back(std::move(d));
        }
    }
    return out;
}

const numerics::SmoothCurve& curve_for(const std::map<Metric, numerics::SmoothCurve>& curves, Metric m) {
    const auto it = curves.find(m);
    if (it == curves.end())
        throw DataError("no fitted curve for metric " + std::string(to_string(m)));
    return it->second;
}

std::vector<double> column(std::span<const TeamGain> gains, Metric metric) {
    std::vector<double> v;
    v.reserve(gains.size());
    for (const auto& g : gains)
        v.push_back(g.at(metric));
    return v;
}

double between_team_ss(std::span<const double> values, std::span<const std::size_t> team_of, std::size_t teams) {
    std::vector<double> sum(teams, 0.0);
    std::vector<int> count(teams, 0);
    double grand = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        sum[team_of[i]] += values[i];
        ++count[team_of[i]];
        grand += values[i];
    }
    grand /= static_cast<double>(values.size());
    double ss = 0.0;
    for (std::size_t t = 0; t < teams; ++t) {
        if (count[t] == 0)
            continue;
        const double mean = sum[t] / count[t];
        ss += count[t] * (mean - grand) * (mean - grand);
    }
    return ss;
}

} // namespace

std::vector<PlayerDelta> realized_deltas(std::span<const DraftClass> classes,
                                         std::span<const CssOrdering> orderings,
                                         const std::map<Metric, numerics::SmoothCurve>& css_curves) {
    return build_deltas(classes, orderings, [&](const PlayerRecord& r, Metric m, int css_rank, int) {
        return metric_differential(r, m, curve_for(css_curves, m), css_rank);
    });
}

std::vector<PlayerDelta> model_deltas(std::span<const DraftClass> classes, std::span<const CssOrdering> orderings,
                                      const std::map<Metric, numerics::SmoothCurve>& surplus_curves) {
    return build_deltas(classes, orderings, [&](const PlayerRecord&, Metric m, int, int delta_rank) {
        return curve_for(surplus_curves, m)(static_cast<double>(delta_rank));
    });
}

std::vector<TeamGain> team_gains(std::span<const PlayerDelta> deltas) {
    std::map<std::string, TeamGain> by_team;
    for (const auto& d : deltas) {
        auto& g = by_team[d.team];
        g.team = d.team;
        ++g.picks;
        for (std::size_t k = 0; k < 3; ++k)
            g.mean_gain[k] += d.delta_metric[k];
    }
    std::vector<TeamGain> out;
    out.reserve(by_team.size());
    for (auto& [team, g] : by_team) {
        for (auto& v : g.mean_gain)
            v /= g.picks;
        out.push_back(std::move(g));
    }
    return out;
}

TestResult normality_check(std::span<const TeamGain> gains, Metric metric) {
    if (gains.size() < 3)
        throw NumericError("normality check needs at least 3 teams");
    const auto v = column(gains, metric);
    return numerics::shapiro_wilk(v);
}

std::vector<std::string> outlier_teams(std::span<const TeamGain> gains, Metric metric) {
    std::vector<std::string> out;
    if (gains.size() < 2)
        return out;
    const auto s = summarize_values(column(gains, metric));
    for (const auto& g : gains)
        if (std::abs(g.at(metric) - s.mean) > 3.0 * s.sd)
            out.push_back(g.team);
    return out;
}

SplitHalfResult split_half_correlation(std::span<const PlayerDelta> deltas, const SplitYears& split) {
    std::vector<PlayerDelta> early, late;
    for (const auto& d : deltas) {
        if (d.year >= split.early_first && d.year <= split.early_last)
            early.push_back(d);
        else if (d.year >= split.late_first && d.year <= split.late_last)
            late.push_back(d);
    }
    const auto early_gains = team_gains(early);
    const auto late_gains = team_gains(late);

    SplitHalfResult result;
    std::map<std::string, const TeamGain*> late_by_team;
    for (const auto& g : late_gains)
        late_by_team[g.team] = &g;

    std::vector<std::pair<const TeamGain*, const TeamGain*>> pairs;
    for (const auto& g : early_gains) {
        const auto it = late_by_team.find(g.team);
        if (it == late_by_team.end()) {
            result.excluded.push_back(g.team);
            continue;
        }
        pairs.emplace_back(&g, it->second);
        late_by_team.erase(it);
    }
    for (const auto& [team, g] : late_by_team)
        result.excluded.push_back(team);
    std::sort(result.excluded.begin(), result.excluded.end());

    if (pairs.size() < 3)
        throw NumericError("split-half correlation needs at least 3 teams with picks in both halves, got " +
                           std::to_string(pairs.size()));
    result.teams_used = static_cast<int>(pairs.size());
    for (Metric m : kAllMetrics) {
        std::vector<double> x, y;
        for (const auto& [e, l] : pairs) {
            x.push_back(e->at(m));
            y.push_back(l->at(m));
        }
        result.by_metric[m] = numerics::pearson(x, y);
    }
    return result;
}

TestResult team_permutation_test(std::span<const PlayerDelta> deltas, Metric metric, int iterations,
                                 std::uint64_t seed) {
    if (iterations < 1)
        throw ConfigError("permutation test needs at least one iteration");
    std::map<std::string, std::size_t> team_index;
    for (const auto& d : deltas)
        team_index.emplace(d.team, team_index.size());
    std::vector<double> values;
    std::vector<std::size_t> team_of;
    for (const auto& d : deltas) {
        values.push_back(d.at(metric));
        team_of.push_back(team_index.at(d.team));
    }
    const double observed = between_team_ss(values, team_of, team_index.size());

    std::mt19937_64 rng(seed);
    int exceed = 0;
    for (int it = 0; it < iterations; ++it) {
        std::shuffle(values.begin(), values.end(), rng);
        if (between_team_ss(values, team_of, team_index.size()) >= observed)
            ++exceed;
    }
    return {observed, static_cast<double>(1 + exceed) / static_cast<double>(1 + iterations)};
}

std::string teams_to_csv(std::span<const TeamGain> gains) {
    std::ostringstream out;
    out.precision(10);
    out << "team,picks,mean_gain_toi,mean_gain_gp,mean_gain_gvt\n";
    for (const auto& g : gains)
        out << g.team << ',' << g.picks << ',' << g.at(Metric::Toi) << ',' << g.at(Metric::Gp) << ','
            << g.at(Metric::Gvt) << '\n';
    return out.str();
}

} // namespace draftval
