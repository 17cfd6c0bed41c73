#pragma once

#include "draftval/cescin.hpp"
#include "draftval/core_model.hpp"
#include "draftval/draft_audit.hpp"
#include "draftval/synth.hpp"
#include "draftval/team_analysis.hpp"
#include "draftval/valuation.hpp"

#include <filesystem>
#include <istream>
#include <optional>
#include <vector>

namespace draftval {

enum class TeamGainBasis { Realized, Model };

struct RunConfig {
    ImputationConfig imputation;
    /// Fixed CESCIN factors; estimated from the data when absent.
    std::optional<CategoryFactors> factors;
    bool per_year_factors = false;
    AuditConfig audit;
    ValuationConfig valuation;
    SplitYears split;
    TeamGainBasis team_basis = TeamGainBasis::Realized;
    /// Permutation iterations for the team diagnostic; 0 skips it.
    int permutation_iterations = 0;
    bool by_position = false;
    std::vector<Metric> metrics{kAllMetrics.begin(), kAllMetrics.end()};
    synth::SynthConfig synth;

    void validate() const;
};

/// Reads `key = value` lines ('#' starts a comment). Unknown keys and bad
/// values throw ConfigError naming the line. Keys not mentioned keep their
/// current value in `cfg`.
void apply_config(std::istream& in, RunConfig& cfg);
RunConfig load_config(const std::filesystem::path& path);

/// "toi", "gp", "gvt" or "all".
std::vector<Metric> parse_metric_selection(std::string_view s);

} // namespace draftval
