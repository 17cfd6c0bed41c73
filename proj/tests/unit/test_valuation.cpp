#include "draftval/cescin.hpp"
#include "draftval/errors.hpp"
#include "draftval/reference_chart.hpp"
#include "draftval/synth.hpp"
#include "draftval/valuation.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace draftval;
using numerics::FitKind;

TEST_SUITE("valuation") {

TEST_CASE("rank differential") {
    CHECK(rank_differential(6, 13) == -7);
    CHECK(rank_differential(13, 6) == 7);
    CHECK(rank_differential(4, 4) == 0);
}

TEST_CASE("average gain with a hand curve") {
    // f(x) = -x on [-5, 5]; earlier pick at -2 adds f(-2) = 2, later pick at 3 subtracts f(3) = -3.
    std::vector<double> grid = numerics::integer_grid(-5, 5), vals;
    for (double x : grid)
        vals.push_back(-x);
    const SmoothCurve f(FitKind::Loess, grid, vals);
    const std::vector<int> d{-2, 3};
    CHECK(average_gain(f, d) == doctest::Approx(2.5));
    const std::vector<int> with_zero{-2, 3, 0, 0};
    CHECK(average_gain(f, with_zero) == doctest::Approx(1.25));
    CHECK(average_gain(f, std::vector<int>{}) == 0.0);
}

TEST_CASE("dollar conversion") {
    CHECK(to_dollars(1.0, Metric::Gp) == 29300.0);
    CHECK(to_dollars(3.0, Metric::Gvt) == 1000000.0);
    CHECK(to_dollars(20.0, Metric::Toi) == 29300.0);
    const auto g = make_gain_estimate(Metric::Gp, 2.0);
    CHECK(g.per_draft == 14.0);
    CHECK(g.dollars == 14.0 * 29300.0);
    DollarConstants bad;
    bad.picks_per_season = 0.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("rank sign split") {
    const std::vector<int> d{-3, -1, 0, 2};
    const auto s = rank_sign_split(d);
    CHECK(s.negative_pct == 50.0);
    CHECK(s.positive_pct == 25.0);
    CHECK(s.zero_pct == 25.0);
}

TEST_CASE("differential fit needs both signs") {
    std::vector<DifferentialPoint> pts;
    for (int i = 1; i <= 20; ++i)
        pts.push_back({i, 1.0 * i});
    CHECK_THROWS_AS(fit_differential_curve(pts, LoessConfig{}), NumericError);
    pts.resize(5);
    CHECK_THROWS_AS(fit_differential_curve(pts, LoessConfig{}), NumericError);
}

TEST_CASE("differential fit on a line recovers the slope") {
    std::vector<DifferentialPoint> pts;
    for (int d = -30; d <= 30; ++d)
        pts.push_back({d, 5.0 - 0.5 * d});
    const auto fit = fit_differential_curve(pts, LoessConfig{});
    CHECK(fit.slope == doctest::Approx(-0.5).epsilon(1e-9));
    CHECK(fit.value_at_zero == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(fit.curve.grid().front() == -30.0);
    CHECK(fit.curve.grid().back() == 30.0);
}

TEST_CASE("value chart from a curve") {
    std::vector<double> grid = numerics::integer_grid(1, 210), vals;
    for (double x : grid)
        vals.push_back(2110.0 - 10.0 * x);
    const auto chart = value_chart_from_curve(SmoothCurve(FitKind::Antitonic, grid, vals));
    CHECK(chart.value(1) == 1000);
    CHECK(chart.value(2) == 995); // 1000 * 2090 / 2100 = 995.24
    CHECK(chart.value(210) == 5);  // 1000 * 10 / 2100 = 4.76
    CHECK(chart.satisfies_invariants());

    std::vector<double> flat(210, 0.0);
    CHECK_THROWS_WITH_AS(value_chart_from_curve(SmoothCurve(FitKind::Antitonic, grid, flat)),
                         "non-positive top value", NumericError);
}

TEST_CASE("value chart invariants") {
    std::array<int, 210> v{};
    v.fill(10);
    v[0] = 1000;
    CHECK(ValueChart(v).satisfies_invariants());
    v[5] = 11;
    CHECK_FALSE(ValueChart(v).satisfies_invariants());
    v[5] = 10;
    v[0] = 999;
    CHECK_FALSE(ValueChart(v).satisfies_invariants());
    CHECK(reference_chart().satisfies_invariants());
}

TEST_CASE("surplus on synthetic drafts") {
    synth::SynthConfig cfg;
    const auto classes = synth::generate_synthetic_draft(cfg);
    std::vector<CssOrdering> orders;
    const auto f = estimate_category_factors(classes);
    for (const auto& dc : classes)
        orders.push_back(css_ordering(dc, f));
    const ValuationConfig vcfg;
    for (Metric m : kAllMetrics) {
        const auto s = estimate_surplus(classes, orders, m, vcfg);
        CHECK(s.points.size() == 1050);
        CHECK(s.team_curve.size() == 210);
        CHECK(s.gain.per_pick > 0.0);
        CHECK(s.split.positive_pct + s.split.negative_pct + s.split.zero_pct == doctest::Approx(100.0));
    }
    const auto goalies = estimate_surplus(classes, orders, Metric::Gp, vcfg, PositionGroup::Goalie);
    std::size_t n_goalies = 0;
    for (const auto& dc : classes)
        for (const auto& r : dc.records())
            n_goalies += r.group() == PositionGroup::Goalie;
    CHECK(goalies.points.size() == n_goalies);
}

TEST_CASE("identical orderings give exactly zero gain") {
    synth::SynthConfig cfg;
    cfg.css_noise = cfg.team_noise = 0.0;
    const auto classes = synth::generate_synthetic_draft(cfg);
    std::vector<CssOrdering> orders;
    for (const auto& dc : classes)
        orders.push_back(css_ordering(dc, cfg.category_factors));
    for (Metric m : kAllMetrics) {
        const auto s = estimate_surplus(classes, orders, m, ValuationConfig{});
        CHECK(s.gain.per_pick == 0.0);
        CHECK(s.gain.dollars == 0.0);
        CHECK(s.split.zero_pct == 100.0);
    }
}

TEST_CASE("chart from noise-free decreasing minutes") {
    std::vector<PlayerRecord> recs;
    for (int s = 1; s <= 210; ++s)
        recs.push_back(testutil::player(s, Position::C, 2110.0 - 10.0 * s, 100, 1.0));
    const std::vector<DraftClass> classes{DraftClass(2000, recs)};
    const auto chart = draft_value_chart(classes, LoessConfig{});
    CHECK(chart.value(1) == 1000);
    CHECK(chart.value(210) == 5);
    CHECK(chart.satisfies_invariants());
    CHECK(chart == draft_value_chart(classes, LoessConfig{}));
    CHECK(chart_to_csv(chart).rfind("selection,value\n1,1000\n", 0) == 0);
}

}
