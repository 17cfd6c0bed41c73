#include "draftval/pipeline.hpp"

#include "draftval/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace draftval {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const char* metric_units(Metric m) {
    switch (m) {
    case Metric::Toi: return "minutes";
    case Metric::Gp: return "games";
    case Metric::Gvt: return "goals";
    }
    return "";
}

json test_json(const TestResult& t) {
    return {{"statistic", t.statistic}, {"p_value", t.p_value}};
}

json surplus_json(const SurplusResult& s) {
    return {{"units", metric_units(s.metric)},
            {"per_pick", s.gain.per_pick},
            {"per_draft", s.gain.per_draft},
            {"dollars", s.gain.dollars},
            {"surplus_slope", s.fit.slope},
            {"surplus_at_zero", s.fit.value_at_zero},
            {"rank_differential_pct",
             {{"positive", s.split.positive_pct}, {"negative", s.split.negative_pct}, {"zero", s.split.zero_pct}}}};
}

json factors_json(const CategoryFactors& f) {
    return {{"na_skater", f.na_skater}, {"na_goalie", f.na_goalie}, {"eu_skater", f.eu_skater}, {"eu_goalie", f.eu_goalie}};
}

} // namespace

Prepared prepare_orderings(std::vector<DraftClass> classes, const RunConfig& cfg) {
    if (classes.empty())
        throw DataError("no draft classes");
    Prepared p;
    p.classes = std::move(classes);
    if (cfg.factors) {
        cfg.factors->validate();
        for (const auto& dc : p.classes)
            p.factors[dc.year()] = *cfg.factors;
    } else if (cfg.per_year_factors) {
        p.factors = estimate_category_factors_per_year(p.classes);
    } else {
        const auto pooled = estimate_category_factors(p.classes);
        for (const auto& dc : p.classes)
            p.factors[dc.year()] = pooled;
    }
    p.orderings.reserve(p.classes.size());
    for (const auto& dc : p.classes)
        p.orderings.push_back(css_ordering(dc, p.factors.at(dc.year())));
    return p;
}

TeamReport analyze_teams(const Prepared& data, const RunConfig& cfg) {
    std::map<Metric, SmoothCurve> curves;
    for (Metric m : kAllMetrics) {
        if (cfg.team_basis == TeamGainBasis::Realized)
            curves[m] = expected_curve(data.classes, data.orderings, Ordering::Css, m, cfg.valuation.loess);
        else
            curves[m] = estimate_surplus(data.classes, data.orderings, m, cfg.valuation).fit.curve;
    }
    const auto deltas = cfg.team_basis == TeamGainBasis::Realized
                            ? realized_deltas(data.classes, data.orderings, curves)
                            : model_deltas(data.classes, data.orderings, curves);

    TeamReport report;
    report.gains = team_gains(deltas);
    for (Metric m : kAllMetrics) {
        report.normality[m] = normality_check(report.gains, m);
        report.outliers[m] = outlier_teams(report.gains, m);
        if (cfg.permutation_iterations > 0)
            report.permutation[m] = team_permutation_test(deltas, m, cfg.permutation_iterations, cfg.synth.seed);
    }
    report.split = split_half_correlation(deltas, cfg.split);
    return report;
}

PipelineResult run_pipeline(std::vector<DraftClass> classes, const RunConfig& cfg) {
    run_stage("config", [&] { cfg.validate(); });
    if (classes.empty())
        throw PipelineError("ingest", kExitData, "no draft classes to analyse");

    PipelineResult r;
    r.data = run_stage("cescin", [&] { return prepare_orderings(std::move(classes), cfg); });
    run_stage("summary", [&] {
        for (Metric m : kAllMetrics)
            r.summaries[m] = summarize_metric(r.data.classes, m);
    });
    r.audit = run_stage("audit", [&] { return audit(r.data.classes, r.data.orderings, cfg.metrics, cfg.audit); });
    run_stage("surplus", [&] {
        for (Metric m : cfg.metrics)
            r.surplus[m] = estimate_surplus(r.data.classes, r.data.orderings, m, cfg.valuation);
        if (cfg.by_position)
            for (auto g : {PositionGroup::Forward, PositionGroup::Defense, PositionGroup::Goalie})
                for (Metric m : cfg.metrics)
                    r.surplus_by_position[g][m] = estimate_surplus(r.data.classes, r.data.orderings, m, cfg.valuation, g);
    });
    r.chart = run_stage("chart", [&] { return draft_value_chart(r.data.classes, cfg.valuation.loess); });
    r.teams = run_stage("teams", [&] { return analyze_teams(r.data, cfg); });
    return r;
}

void write_text(const fs::path& path, const std::string& text) {
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DataError("cannot write " + path.string());
    out << text;
}

std::string cescin_to_csv(const Prepared& data) {
    std::ostringstream out;
    out.precision(10);
    out << "year,selection,team,name,css_category,css_category_rank,cescin_value,css_rank,rank_differential\n";
    for (std::size_t c = 0; c < data.classes.size(); ++c) {
        const auto& dc = data.classes[c];
        for (std::size_t i = 0; i < dc.size(); ++i) {
            const auto& r = dc[i];
            const int css_rank = data.orderings[c].css_rank[i];
            out << r.year << ',' << r.selection << ',' << r.team << ',' << r.name << ',' << to_string(r.css_category)
                << ',';
            if (r.css_category_rank)
                out << *r.css_category_rank;
            out << ',' << data.orderings[c].cescin_value[i] << ',' << css_rank << ','
                << rank_differential(r.selection, css_rank) << '\n';
        }
    }
    return out.str();
}

std::string factors_to_json(const Prepared& data) {
    json j = json::object();
    for (const auto& [year, f] : data.factors)
        j[std::to_string(year)] = factors_json(f);
    return j.dump(2);
}

std::string summaries_to_json(const std::map<Metric, SummaryStats>& summaries) {
    json j = json::object();
    for (const auto& [m, s] : summaries)
        j[std::string(to_string(m))] = {{"median", s.median}, {"mean", s.mean}, {"p75", s.p75}, {"max", s.max}, {"sd", s.sd}};
    return j.dump(2);
}

std::string gains_to_json(const std::map<Metric, SurplusResult>& surplus) {
    json j = json::object();
    for (const auto& [m, s] : surplus)
        j[std::string(to_string(m))] = surplus_json(s);
    return j.dump(2);
}

std::string gains_by_position_to_json(const std::map<PositionGroup, std::map<Metric, SurplusResult>>& by_group) {
    json j = json::object();
    for (const auto& [g, per_metric] : by_group)
        for (const auto& [m, s] : per_metric)
            j[std::string(to_string(g))][std::string(to_string(m))] = surplus_json(s);
    return j.dump(2);
}

std::string team_report_to_json(const TeamReport& report) {
    json j;
    for (const auto& [m, t] : report.normality)
        j["normality"][std::string(to_string(m))] = test_json(t);
    for (const auto& [m, teams] : report.outliers)
        j["outliers"][std::string(to_string(m))] = teams;
    j["split_half"]["teams_used"] = report.split.teams_used;
    j["split_half"]["excluded"] = report.split.excluded;
    for (const auto& [m, t] : report.split.by_metric)
        j["split_half"][std::string(to_string(m))] = test_json(t);
    for (const auto& [m, t] : report.permutation)
        j["permutation_extension"][std::string(to_string(m))] = test_json(t);
    return j.dump(2);
}

void write_curves(const std::map<Metric, SurplusResult>& surplus, const fs::path& dir) {
    for (const auto& [m, s] : surplus) {
        const std::string name(to_string(m));
        write_text(dir / (name + "_team.csv"), curve_to_csv(s.team_curve));
        write_text(dir / (name + "_css.csv"), curve_to_csv(s.css_curve));
        write_text(dir / (name + "_surplus.csv"), curve_to_csv(s.fit.curve));
    }
}

void write_pipeline_outputs(const PipelineResult& r, const fs::path& out_dir) {
    run_stage("write", [&] {
        write_text(out_dir / "summary.json", summaries_to_json(r.summaries));
        write_text(out_dir / "cescin.csv", cescin_to_csv(r.data));
        write_text(out_dir / "cescin.json", factors_to_json(r.data));
        write_text(out_dir / "audit.json", audit_to_json(r.audit));
        write_text(out_dir / "audit.csv", audit_to_csv(r.audit));
        write_curves(r.surplus, out_dir / "curves");
        write_text(out_dir / "gains.json", gains_to_json(r.surplus));
        if (!r.surplus_by_position.empty())
            write_text(out_dir / "gains_by_position.json", gains_by_position_to_json(r.surplus_by_position));
        write_text(out_dir / "chart.csv", chart_to_csv(r.chart));
        write_text(out_dir / "teams.csv", teams_to_csv(r.teams.gains));
        write_text(out_dir / "teams.json", team_report_to_json(r.teams));
    });
}

} // namespace draftval
