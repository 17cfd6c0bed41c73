#include "draftval/config.hpp"
#include "draftval/errors.hpp"
#include "draftval/io.hpp"
#include "draftval/synth.hpp"

#include <doctest.h>

#include <sstream>

using namespace draftval;

namespace {

IngestResult ingest_text(const std::string& text) {
    std::istringstream in(text);
    return ingest(in);
}

const std::string kHeader = std::string(kCsvHeader) + "\n";

} // namespace

TEST_SUITE("io") {

TEST_CASE("ingest a small file") {
    const auto r = ingest_text(kHeader +
                               "2001,1,T01,Alpha,C,NA_SKATER,1,300,4500,22.5\n"
                               "2001,2,T02,\"Beta, Jr.\",G,EU_GOALIE,1,10,,1.5\n"
                               "2001,3,T03,Gamma,D,,,0,,\n");
    REQUIRE(r.classes.size() == 1);
    const auto& dc = r.classes[0];
    CHECK(dc.size() == 3);
    CHECK(dc[1].name == "Beta, Jr.");
    CHECK(dc[1].toi7 == 200.0);
    CHECK(dc[2].gvt7 == -30.0);
    CHECK_FALSE(dc[2].played);
    CHECK(r.notes.empty());
}

TEST_CASE("columns may come in any order") {
    const auto r = ingest_text(
        "name,year,selection,team,position,gp7,toi7,gvt7,css_category,css_category_rank\n"
        "Alpha,2001,1,T01,C,300,4500,22.5,NA_SKATER,1\n");
    CHECK(r.classes[0][0].toi7 == 4500.0);
}

TEST_CASE("ingest errors carry line numbers") {
    CHECK_THROWS_WITH_AS(ingest_text(""), doctest::Contains("header"), DataError);
    CHECK_THROWS_WITH_AS(ingest_text("year,selection\n"), doctest::Contains("team"), DataError);
    CHECK_THROWS_WITH_AS(ingest_text(kHeader), doctest::Contains("no data rows"), DataError);
    CHECK_THROWS_WITH_AS(ingest_text(kHeader + "2001,1,T01,A,Q,,,0,,\n"), doctest::Contains("line 2"), DataError);
    CHECK_THROWS_WITH_AS(ingest_text(kHeader + "2001,1,T01,A,C,,,x,,\n"), doctest::Contains("line 2"), DataError);
    CHECK_THROWS_WITH_AS(ingest_text(kHeader + "2001,1,T01,A,C,,,0,,\n2001,1,T02,B,C,,,0,,\n"),
                         doctest::Contains("line 2"), DataError);
}

TEST_CASE("a single missing selection is noted") {
    const auto r = ingest_text(kHeader + "2001,1,T01,A,C,,,0,,\n2001,3,T03,C,C,,,0,,\n");
    REQUIRE(r.notes.size() == 1);
    CHECK(r.notes[0].find("selection 2") != std::string::npos);
}

TEST_CASE("emit and ingest round-trip") {
    synth::SynthConfig cfg;
    cfg.years = 2;
    cfg.seed = 77;
    const auto classes = synth::generate_synthetic_draft(cfg);
    std::istringstream in(emit_csv(classes));
    const auto back = ingest(in);
    REQUIRE(back.classes.size() == classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
        REQUIRE(back.classes[c].size() == classes[c].size());
        for (std::size_t i = 0; i < classes[c].size(); ++i)
            CHECK(back.classes[c][i] == classes[c][i]);
    }
}

TEST_CASE("csv field splitting") {
    CHECK(split_csv_line("a,\"b,c\",,\"d\"\"e\"") == std::vector<std::string>{"a", "b,c", "", "d\"e"});
}

}

TEST_SUITE("config") {

TEST_CASE("configuration keys") {
    std::istringstream in("# comment\n"
                          "loess.span = 0.4\n"
                          "cescin.factors = {na_skater: 1.2, na_goalie: 9, eu_skater: 2.5, eu_goalie: 20}\n"
                          "valuation.expectation = team   # trailing comment\n"
                          "metric = gvt\n"
                          "teams.permutation_iterations = 99\n"
                          "synth.seed = 5\n");
    RunConfig cfg;
    apply_config(in, cfg);
    CHECK(cfg.valuation.loess.span == 0.4);
    REQUIRE(cfg.factors.has_value());
    CHECK(cfg.factors->na_goalie == 9.0);
    CHECK(cfg.factors->eu_goalie == 20.0);
    CHECK(cfg.valuation.basis == ExpectationBasis::Team);
    CHECK(cfg.metrics == std::vector<Metric>{Metric::Gvt});
    CHECK(cfg.permutation_iterations == 99);
    CHECK(cfg.synth.seed == 5);
    CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("bad configuration is rejected") {
    auto apply = [](const std::string& text) {
        std::istringstream in(text);
        RunConfig cfg;
        apply_config(in, cfg);
        cfg.validate();
    };
    CHECK_THROWS_AS(apply("nonsense.key = 1\n"), ConfigError);
    CHECK_THROWS_AS(apply("loess.span\n"), ConfigError);
    CHECK_THROWS_AS(apply("loess.span = abc\n"), ConfigError);
    CHECK_THROWS_AS(apply("loess.span = 0\n"), ConfigError);
    CHECK_THROWS_AS(apply("cescin.factors = {na_skater: 1}\n"), ConfigError);
    CHECK_THROWS_AS(apply("cescin.factors.na_goalie = -2\n"), ConfigError);
    CHECK_THROWS_AS(apply("metric = points\n"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/config.txt"), ConfigError);
}

TEST_CASE("metric selection") {
    CHECK(parse_metric_selection("all").size() == 3);
    CHECK(parse_metric_selection("toi") == std::vector<Metric>{Metric::Toi});
}

}
