#include "cli.hpp"

#include "draftval/config.hpp"
#include "draftval/errors.hpp"
#include "draftval/io.hpp"
#include "draftval/pipeline.hpp"
#include "draftval/reference_chart.hpp"
#include "draftval/synth.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>

namespace draftval::cli {

namespace fs = std::filesystem;

namespace {

struct Options {
    std::string input;
    std::string config;
    std::string metric = "all";
    std::string out;
    std::optional<std::uint64_t> seed;
    bool by_position = false;
    bool reference = false;
};

void add_common(CLI::App* cmd, Options& o, bool with_input = true) {
    if (with_input)
        cmd->add_option("input", o.input, "Draft CSV (synthetic data is generated when omitted)");
    cmd->add_option("--config", o.config, "Key/value configuration file");
    cmd->add_option("--metric", o.metric, "Metric to analyse")->check(CLI::IsMember({"toi", "gp", "gvt", "all"}));
    cmd->add_option("--out", o.out, "Output directory (default: $DRAFTVAL_OUT or ./draftval_out)");
    cmd->add_option("--seed", o.seed, "Seed for synthetic data");
    cmd->add_flag("--by-position", o.by_position, "Stratify the valuation by position group");
}

fs::path output_dir(const Options& o) {
    if (!o.out.empty())
        return o.out;
    if (const char* env = std::getenv("DRAFTVAL_OUT"); env && *env)
        return env;
    return "draftval_out";
}

RunConfig make_config(const Options& o) {
    RunConfig cfg = run_stage("config", [&] { return o.config.empty() ? RunConfig{} : load_config(o.config); });
    run_stage("config", [&] {
        cfg.metrics = parse_metric_selection(o.metric);
        if (o.seed)
            cfg.synth.seed = *o.seed;
        if (o.by_position)
            cfg.by_position = true;
        cfg.validate();
    });
    return cfg;
}

std::vector<DraftClass> load_data(const Options& o, const RunConfig& cfg, std::ostream& err) {
    if (o.input.empty()) {
        err << "note: no input file, generating synthetic drafts (seed " << cfg.synth.seed << ")\n";
        return run_stage("synth", [&] { return synth::generate_synthetic_draft(cfg.synth); });
    }
    auto result = run_stage("ingest", [&] { return ingest_file(o.input, cfg.imputation); });
    for (const auto& note : result.notes)
        err << "note: " << note << '\n';
    return std::move(result.classes);
}

void report_gains(const std::map<Metric, SurplusResult>& surplus, std::ostream& out) {
    out << std::fixed << std::setprecision(3);
    for (const auto& [m, s] : surplus)
        out << to_string(m) << ": per pick " << s.gain.per_pick << ", per draft " << s.gain.per_draft << ", $"
            << std::setprecision(0) << s.gain.dollars << std::setprecision(3) << " per team per draft"
            << " (surplus slope " << s.fit.slope << ")\n";
}

int dispatch(const std::string& command, const Options& o, std::ostream& out, std::ostream& err) {
    if (command == "chart" && o.reference) {
        const auto dir = output_dir(o);
        write_text(dir / "chart.csv", chart_to_csv(reference_chart()));
        out << "wrote reference chart to " << (dir / "chart.csv").string() << '\n';
        return kExitOk;
    }

    const RunConfig cfg = make_config(o);

    if (command == "synth") {
        RunConfig synth_cfg = cfg;
        const auto classes = run_stage("synth", [&] { return synth::generate_synthetic_draft(synth_cfg.synth); });
        const std::string csv = emit_csv(classes);
        if (o.out.empty()) {
            out << csv;
        } else {
            write_text(fs::path(o.out) / "synthetic.csv", csv);
            out << "wrote " << (fs::path(o.out) / "synthetic.csv").string() << '\n';
        }
        return kExitOk;
    }

    if (command == "ingest-check") {
        if (o.input.empty())
            throw ConfigError("ingest-check needs an input file");
        const auto classes = load_data(o, cfg, err);
        std::size_t total = 0;
        for (const auto& dc : classes) {
            out << "year " << dc.year() << ": " << dc.size() << " picks\n";
            total += dc.size();
        }
        out << "ok: " << classes.size() << " draft class(es), " << total << " records\n";
        return kExitOk;
    }

    auto classes = load_data(o, cfg, err);
    const auto dir = output_dir(o);

    if (command == "run") {
        const auto result = run_pipeline(std::move(classes), cfg);
        write_pipeline_outputs(result, dir);
        report_gains(result.surplus, out);
        out << "wrote results to " << dir.string() << '\n';
        return kExitOk;
    }

    const Prepared data = run_stage("cescin", [&] { return prepare_orderings(std::move(classes), cfg); });

    if (command == "cescin") {
        write_text(dir / "cescin.csv", cescin_to_csv(data));
        write_text(dir / "cescin.json", factors_to_json(data));
        out << "wrote " << (dir / "cescin.csv").string() << '\n';
    } else if (command == "audit") {
        const auto report = run_stage("audit", [&] { return audit(data.classes, data.orderings, cfg.metrics, cfg.audit); });
        write_text(dir / "audit.json", audit_to_json(report));
        write_text(dir / "audit.csv", audit_to_csv(report));
        out << audit_to_csv(report);
    } else if (command == "curves") {
        run_stage("curves", [&] {
            for (Metric m : cfg.metrics)
                for (Ordering ord : {Ordering::Team, Ordering::Css}) {
                    const auto curve = expected_curve(data.classes, data.orderings, ord, m, cfg.valuation.loess);
                    write_text(dir / "curves" / (std::string(to_string(m)) + "_" + std::string(to_string(ord)) + ".csv"),
                               curve_to_csv(curve));
                }
        });
        out << "wrote curves to " << (dir / "curves").string() << '\n';
    } else if (command == "surplus") {
        std::map<Metric, SurplusResult> surplus;
        std::map<PositionGroup, std::map<Metric, SurplusResult>> by_group;
        run_stage("surplus", [&] {
            for (Metric m : cfg.metrics)
                surplus[m] = estimate_surplus(data.classes, data.orderings, m, cfg.valuation);
            if (cfg.by_position)
                for (auto g : {PositionGroup::Forward, PositionGroup::Defense, PositionGroup::Goalie})
                    for (Metric m : cfg.metrics)
                        by_group[g][m] = estimate_surplus(data.classes, data.orderings, m, cfg.valuation, g);
        });
        write_curves(surplus, dir / "curves");
        write_text(dir / "gains.json", gains_to_json(surplus));
        if (!by_group.empty())
            write_text(dir / "gains_by_position.json", gains_by_position_to_json(by_group));
        report_gains(surplus, out);
    } else if (command == "teams") {
        const auto report = run_stage("teams", [&] { return analyze_teams(data, cfg); });
        write_text(dir / "teams.csv", teams_to_csv(report.gains));
        write_text(dir / "teams.json", team_report_to_json(report));
        out << teams_to_csv(report.gains);
    } else if (command == "chart") {
        const auto chart = run_stage("chart", [&] { return draft_value_chart(data.classes, cfg.valuation.loess); });
        write_text(dir / "chart.csv", chart_to_csv(chart));
        out << "wrote " << (dir / "chart.csv").string() << '\n';
    }
    return kExitOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Draft scouting valuation against the central-scouting ordering"};
    app.require_subcommand(1);

    Options o;
    std::vector<std::pair<std::string, CLI::App*>> commands = {
        {"ingest-check", app.add_subcommand("ingest-check", "Validate a draft CSV")},
        {"synth", app.add_subcommand("synth", "Generate a synthetic draft CSV")},
        {"cescin", app.add_subcommand("cescin", "Integrated CSS ordering and factors")},
        {"audit", app.add_subcommand("audit", "Optimal / nearly-optimal pick rates")},
        {"curves", app.add_subcommand("curves", "Expected-metric curves per ordering")},
        {"surplus", app.add_subcommand("surplus", "Rank-differential surplus and dollar value")},
        {"teams", app.add_subcommand("teams", "Per-team returns and significance checks")},
        {"chart", app.add_subcommand("chart", "Draft value pick chart")},
        {"run", app.add_subcommand("run", "Full pipeline")},
    };
    for (auto& [name, cmd] : commands)
        add_common(cmd, o, name != "synth");
    commands[7].second->add_flag("--reference", o.reference, "Write the embedded published chart");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::string command;
    for (auto& [name, cmd] : commands)
        if (cmd->parsed())
            command = name;

    try {
        return dispatch(command, o, out, err);
    } catch (const PipelineError& e) {
        err << "error: " << e.what() << '\n';
        return e.exit_code();
    } catch (const ConfigError& e) {
        err << "error: [config] " << e.what() << '\n';
        return kExitUsage;
    } catch (const DataError& e) {
        err << "error: [" << command << "] " << e.what() << '\n';
        return kExitData;
    } catch (const NumericError& e) {
        err << "error: [" << command << "] " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::exception& e) {
        err << "error: [" << command << "] " << e.what() << '\n';
        return kExitData;
    }
}

} // namespace draftval::cli
