#include "draftval/valuation.hpp"

#include "draftval/errors.hpp"
#include "draftval/numerics/antitonic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace draftval {

using numerics::WeightedPoint;

namespace {

void check_aligned(std::span<const DraftClass> classes, std::span<const CssOrdering> orderings) {
    if (classes.size() != orderings.size())
        throw DataError("one CSS ordering per draft class is required");
    for (std::size_t c = 0; c < classes.size(); ++c)
        if (classes[c].size() != orderings[c].size())
            throw DataError("CSS ordering does not match draft class " + std::to_string(classes[c].year()));
}

bool in_group(const PlayerRecord& r, std::optional<PositionGroup> group) {
    return !group || r.group() == *group;
}

} // namespace

SmoothCurve expected_curve(std::span<const DraftClass> classes, std::span<const CssOrdering> orderings,
                           Ordering ordering, Metric metric, const LoessConfig& cfg,
                           std::optional<PositionGroup> group) {
    check_aligned(classes, orderings);
    std::vector<WeightedPoint> pts;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (std::size_t i = 0; i < classes[c].size(); ++i) {
            const auto& r = classes[c][i];
            if (!in_group(r, group))
                continue;
            const int rank = ordering == Ordering::Team ? r.selection : orderings[c].css_rank[i];
            pts.push_back({static_cast<double>(rank), r.metric(metric), 1.0});
        }
    }
    return numerics::loess_fit(pts, cfg, numerics::integer_grid(1, kMaxSelection));
}

double metric_differential(const PlayerRecord& rec, Metric metric, const SmoothCurve& expected, int rank) {
    return rec.metric(metric) - expected(static_cast<double>(rank));
}

std::vector<DifferentialPoint> differential_points(std::span<const DraftClass> classes,
                                                   std::span<const CssOrdering> orderings, Metric metric,
                                                   const SmoothCurve& expected, ExpectationBasis basis,
                                                   std::optional<PositionGroup> group) {
    check_aligned(classes, orderings);
    std::vector<DifferentialPoint> out;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (std::size_t i = 0; i < classes[c].size(); ++i) {
            const auto& r = classes[c][i];
            if (!in_group(r, group))
                continue;
            const int css_rank = orderings[c].css_rank[i];
            const int rank = basis == ExpectationBasis::Css ? css_rank : r.selection;
            out.push_back({rank_differential(r.selection, css_rank),
                           metric_differential(r, metric, expected, rank)});
        }
    }
    return out;
}

DifferentialFit fit_differential_curve(std::span<const DifferentialPoint> points, const LoessConfig& cfg) {
    if (points.size() < 10)
        throw NumericError("differential fit needs at least 10 points, got " + std::to_string(points.size()));
    int lo = points.front().delta_rank, hi = lo;
    std::vector<WeightedPoint> pts;
    pts.reserve(points.size());
    for (const auto& p : points) {
        lo = std::min(lo, p.delta_rank);
        hi = std::max(hi, p.delta_rank);
        pts.push_back({static_cast<double>(p.delta_rank), p.delta_metric, 1.0});
    }
    if (lo >= 0 || hi <= 0)
        throw NumericError("differential fit needs both negative and positive rank differentials");

    DifferentialFit fit;
    fit.curve = numerics::loess_fit(pts, cfg, numerics::integer_grid(lo, hi));

    const auto g = fit.curve.grid();
    const auto v = fit.curve.values();
    const double n = static_cast<double>(g.size());
    double gm = 0.0, vm = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        gm += g[i];
        vm += v[i];
    }
    gm /= n;
    vm /= n;
    double sgg = 0.0, sgv = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        sgg += (g[i] - gm) * (g[i] - gm);
        sgv += (g[i] - gm) * (v[i] - vm);
    }
    fit.slope = sgv / sgg;
    fit.value_at_zero = fit.curve(0.0);
    return fit;
}

double average_gain(const SmoothCurve& f, std::span<const int> delta_ranks) {
    if (delta_ranks.empty())
        return 0.0;
    double earlier = 0.0, later = 0.0;
    for (int d : delta_ranks) {
        if (d < 0)
            earlier += f(static_cast<double>(d));
        else if (d > 0)
            later += f(static_cast<double>(d));
    }
    return (earlier - later) / static_cast<double>(delta_ranks.size());
}

void DollarConstants::validate() const {
    if (!(salary_per_game > 0.0 && dollars_per_goal > 0.0 && minutes_per_game > 0.0 && picks_per_season > 0.0))
        throw ConfigError("dollar constants must all be positive");
}

double to_dollars(double gain, Metric metric, const DollarConstants& dc) {
    switch (metric) {
    case Metric::Gp: return gain * dc.salary_per_game;
    case Metric::Gvt: return gain * dc.dollars_per_goal;
    case Metric::Toi: return gain / dc.minutes_per_game * dc.salary_per_game;
    }
    throw ConfigError("unknown metric");
}

GainEstimate make_gain_estimate(Metric metric, double per_pick, const DollarConstants& dc) {
    GainEstimate g;
    g.metric = metric;
    g.per_pick = per_pick;
    g.per_draft = per_pick * dc.picks_per_season;
    g.dollars = to_dollars(g.per_draft, metric, dc);
    return g;
}

RankSignSplit rank_sign_split(std::span<const int> delta_ranks) {
    RankSignSplit s;
    if (delta_ranks.empty())
        return s;
    int pos = 0, neg = 0, zero = 0;
    for (int d : delta_ranks)
        (d > 0 ? pos : d < 0 ? neg : zero)++;
    const double n = static_cast<double>(delta_ranks.size());
    s.positive_pct = 100.0 * pos / n;
    s.negative_pct = 100.0 * neg / n;
    s.zero_pct = 100.0 * zero / n;
    return s;
}

SurplusResult estimate_surplus(std::span<const DraftClass> classes, std::span<const CssOrdering> orderings,
                               Metric metric, const ValuationConfig& cfg, std::optional<PositionGroup> group) {
    SurplusResult out;
    out.metric = metric;
    out.team_curve = expected_curve(classes, orderings, Ordering::Team, metric, cfg.loess, group);
    out.css_curve = expected_curve(classes, orderings, Ordering::Css, metric, cfg.loess, group);
    const auto& expected = cfg.basis == ExpectationBasis::Css ? out.css_curve : out.team_curve;
    out.points = differential_points(classes, orderings, metric, expected, cfg.basis, group);

    std::vector<int> deltas;
    deltas.reserve(out.points.size());
    for (const auto& p : out.points)
        deltas.push_back(p.delta_rank);
    out.split = rank_sign_split(deltas);
    if (!out.points.empty() && std::all_of(deltas.begin(), deltas.end(), [](int d) { return d == 0; })) {
        // Identical orderings: flat curve, G = 0.
        double mean = 0.0;
        for (const auto& p : out.points)
            mean += p.delta_metric / static_cast<double>(out.points.size());
        out.fit.curve = SmoothCurve(numerics::FitKind::Loess, {0.0}, {mean});
        out.fit.value_at_zero = mean;
        out.gain = make_gain_estimate(metric, 0.0, cfg.dollars);
        return out;
    }
    out.fit = fit_differential_curve(out.points, cfg.loess);
    out.gain = make_gain_estimate(metric, average_gain(out.fit.curve, deltas), cfg.dollars);
    return out;
}

bool ValueChart::satisfies_invariants() const {
    if (values_[0] != 1000)
        return false;
    for (std::size_t i = 0; i < kSize; ++i) {
        if (values_[i] < 0)
            return false;
        if (i > 0 && values_[i] > values_[i - 1])
            return false;
    }
    return true;
}

ValueChart value_chart_from_curve(const SmoothCurve& monotone) {
    const double top = monotone(1.0);
    if (!(top > 0.0))
        throw NumericError("non-positive top value");
    std::array<int, ValueChart::kSize> values{};
    for (std::size_t k = 0; k < ValueChart::kSize; ++k) {
        const double scaled = 1000.0 * monotone(static_cast<double>(k + 1)) / top;
        values[k] = std::max(0, static_cast<int>(std::floor(scaled + 0.5)));
    }
    return ValueChart(values);
}

ValueChart draft_value_chart(std::span<const DraftClass> classes, const LoessConfig& cfg) {
    std::vector<WeightedPoint> pts;
    for (const auto& dc : classes)
        for (const auto& r : dc.records())
            pts.push_back({static_cast<double>(r.selection), r.toi7, 1.0});
    const auto smooth = numerics::loess_fit(pts, cfg, numerics::integer_grid(1, kMaxSelection));

    std::vector<WeightedPoint> grid_pts;
    grid_pts.reserve(smooth.size());
    for (std::size_t i = 0; i < smooth.size(); ++i)
        grid_pts.push_back({smooth.grid()[i], smooth.values()[i], 1.0});
    return value_chart_from_curve(numerics::antitonic_fit(grid_pts));
}

std::string chart_to_csv(const ValueChart& chart) {
    std::ostringstream out;
    out << "selection,value\n";
    for (std::size_t k = 0; k < ValueChart::kSize; ++k)
        out << k + 1 << ',' << chart.values()[k] << '\n';
    return out.str();
}

std::string curve_to_csv(const SmoothCurve& curve) {
    std::ostringstream out;
    out.precision(10);
    out << "x,fitted\n";
    for (std::size_t i = 0; i < curve.size(); ++i)
        out << curve.grid()[i] << ',' << curve.values()[i] << '\n';
    return out.str();
}

} // namespace draftval
