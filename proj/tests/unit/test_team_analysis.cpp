#include "draftval/errors.hpp"
#include "draftval/team_analysis.hpp"

#include <doctest.h>

#include <cmath>

using namespace draftval;

namespace {

PlayerDelta delta(int year, const std::string& team, double toi, double gp = 0.0, double gvt = 0.0) {
    PlayerDelta d;
    d.year = year;
    d.team = team;
    d.delta_metric = {toi, gp, gvt};
    return d;
}

} // namespace

TEST_SUITE("team_analysis") {

TEST_CASE("team means") {
    const std::vector<PlayerDelta> d{delta(1998, "B", 4), delta(1999, "A", 1), delta(2000, "A", 3),
                                     delta(2001, "B", -2, 6)};
    const auto g = team_gains(d);
    REQUIRE(g.size() == 2);
    CHECK(g[0].team == "A");
    CHECK(g[0].picks == 2);
    CHECK(g[0].at(Metric::Toi) == 2.0);
    CHECK(g[1].at(Metric::Toi) == 1.0);
    CHECK(g[1].at(Metric::Gp) == 3.0);
}

TEST_CASE("split-half pairs teams across the two periods") {
    std::vector<PlayerDelta> d;
    const double early[] = {1.0, 2.0, 3.0, 4.0};
    const double late[] = {2.0, 4.0, 6.0, 8.0};
    const char* teams[] = {"A", "B", "C", "D"};
    for (int t = 0; t < 4; ++t) {
        d.push_back(delta(1999, teams[t], early[t], early[t], -early[t]));
        d.push_back(delta(2002, teams[t], late[t], 8.0 - late[t], late[t]));
    }
    d.push_back(delta(1998, "E", 100.0)); // early only
    const auto r = split_half_correlation(d);
    CHECK(r.teams_used == 4);
    CHECK(r.excluded == std::vector<std::string>{"E"});
    CHECK(r.by_metric.at(Metric::Toi).statistic == doctest::Approx(1.0));
    CHECK(r.by_metric.at(Metric::Gp).statistic == doctest::Approx(-1.0));
    CHECK(r.by_metric.at(Metric::Gvt).statistic == doctest::Approx(-1.0));

    const std::vector<PlayerDelta> too_few{delta(1998, "A", 1), delta(2002, "A", 2)};
    CHECK_THROWS_AS(split_half_correlation(too_few), NumericError);
}

TEST_CASE("outliers sit beyond three standard deviations") {
    std::vector<TeamGain> g;
    for (int i = 0; i < 20; ++i) {
        TeamGain t;
        t.team = "T" + std::to_string(i);
        t.mean_gain = {i % 2 ? 1.0 : -1.0, 0.0, 0.0};
        g.push_back(t);
    }
    g[3].mean_gain[0] = 50.0;
    CHECK(outlier_teams(g, Metric::Toi) == std::vector<std::string>{"T3"});
    CHECK(outlier_teams(g, Metric::Gp).empty());
}

TEST_CASE("normality check needs three teams") {
    std::vector<TeamGain> g(2);
    CHECK_THROWS_AS(normality_check(g, Metric::Toi), NumericError);
}

TEST_CASE("permutation test") {
    std::vector<PlayerDelta> d;
    for (int i = 0; i < 40; ++i)
        d.push_back(delta(1998, i < 20 ? "A" : "B", i < 20 ? 10.0 + 0.01 * i : -10.0 - 0.01 * i));
    const auto strong = team_permutation_test(d, Metric::Toi, 199, 1);
    CHECK(strong.p_value == doctest::Approx(1.0 / 200.0));
    CHECK(strong.p_value == team_permutation_test(d, Metric::Toi, 199, 1).p_value);

    for (int i = 0; i < 40; ++i)
        d[static_cast<std::size_t>(i)].team = i % 2 ? "A" : "B";
    CHECK(team_permutation_test(d, Metric::Toi, 199, 1).p_value > 0.05);
    CHECK_THROWS_AS(team_permutation_test(d, Metric::Toi, 0, 1), ConfigError);
}

TEST_CASE("teams csv") {
    TeamGain t;
    t.team = "T01";
    t.picks = 3;
    t.mean_gain = {1.5, 2.0, -0.5};
    const std::vector<TeamGain> g{t};
    const auto csv = teams_to_csv(g);
    CHECK(csv == "team,picks,mean_gain_toi,mean_gain_gp,mean_gain_gvt\nT01,3,1.5,2,-0.5\n");
}

}
