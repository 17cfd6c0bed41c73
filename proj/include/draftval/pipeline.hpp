#pragma once

#include "draftval/config.hpp"
#include "draftval/draft_audit.hpp"
#include "draftval/errors.hpp"
#include "draftval/team_analysis.hpp"
#include "draftval/valuation.hpp"

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace draftval {

/// Exit codes shared by the CLI and pipeline errors.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitData = 2, kExitNumeric = 3 };

/// A module failure tagged with the pipeline stage it happened in.
class PipelineError : public std::runtime_error {
public:
    PipelineError(std::string stage, int exit_code, const std::string& what)
        : std::runtime_error("[" + stage + "] " + what), stage_(std::move(stage)), exit_code_(exit_code) {}

    const std::string& stage() const { return stage_; }
    int exit_code() const { return exit_code_; }

private:
    std::string stage_;
    int exit_code_;
};

/// Runs `fn`, converting DataError / NumericError / ConfigError into a
/// PipelineError for `stage`.
template <typename Fn>
auto run_stage(const std::string& stage, Fn&& fn) -> decltype(fn());

struct Prepared {
    std::vector<DraftClass> classes;
    std::vector<CssOrdering> orderings;
    /// Factors used for each year (identical entries when pooled).
    std::map<int, CategoryFactors> factors;
};

/// Builds the integrated CSS ordering of every class.
Prepared prepare_orderings(std::vector<DraftClass> classes, const RunConfig& cfg);

struct TeamReport {
    std::vector<TeamGain> gains;
    std::map<Metric, TestResult> normality;
    std::map<Metric, std::vector<std::string>> outliers;
    SplitHalfResult split;
    std::map<Metric, TestResult> permutation;
};

TeamReport analyze_teams(const Prepared& data, const RunConfig& cfg);

struct PipelineResult {
    Prepared data;
    std::map<Metric, SummaryStats> summaries;
    AuditReport audit;
    std::map<Metric, SurplusResult> surplus;
    std::map<PositionGroup, std::map<Metric, SurplusResult>> surplus_by_position;
    ValueChart chart;
    TeamReport teams;
};

/// cescin -> audit -> curves/differentials/gains -> chart -> teams.
/// Throws PipelineError tagged with the failing stage.
PipelineResult run_pipeline(std::vector<DraftClass> classes, const RunConfig& cfg);

/// Writes audit.json, audit.csv, curves/*.csv, gains.json, chart.csv,
/// teams.csv, teams.json, cescin.csv, cescin.json and summary.json.
void write_pipeline_outputs(const PipelineResult& result, const std::filesystem::path& out_dir);

// Individual artifact writers used by the CLI subcommands.
void write_text(const std::filesystem::path& path, const std::string& text);
std::string cescin_to_csv(const Prepared& data);
std::string factors_to_json(const Prepared& data);
std::string summaries_to_json(const std::map<Metric, SummaryStats>& summaries);
std::string gains_to_json(const std::map<Metric, SurplusResult>& surplus);
std::string gains_by_position_to_json(const std::map<PositionGroup, std::map<Metric, SurplusResult>>& by_group);
std::string team_report_to_json(const TeamReport& report);
void write_curves(const std::map<Metric, SurplusResult>& surplus, const std::filesystem::path& dir);

// ---------------------------------------------------------------------------

template <typename Fn>
auto run_stage(const std::string& stage, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const PipelineError&) {
        throw;
    } catch (const DataError& e) {
        throw PipelineError(stage, kExitData, e.what());
    } catch (const NumericError& e) {
        throw PipelineError(stage, kExitNumeric, e.what());
    } catch (const ConfigError& e) {
        throw PipelineError(stage, kExitUsage, e.what());
    }
}

} // namespace draftval
