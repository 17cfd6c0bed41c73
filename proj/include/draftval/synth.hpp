#pragma once

#include "draftval/cescin.hpp"
#include "draftval/core_model.hpp"

#include <cstdint>
#include <vector>

namespace draftval::synth {

/// Parameters of the synthetic league used to exercise the pipeline.
///
/// Every year has picks_per_year players with latent talent
/// q_i = -quality_decay * ln(i) for talent rank i. Teams draft by
/// q + team_noise * e, CSS ranks by q + css_noise * e, and outcomes follow
/// q + outcome_noise * e through monotone links (logistic probability of
/// playing at all, log-linear games, minutes and GVT given games).
struct SynthConfig {
    std::uint64_t seed = 42;
    int years = 5;
    int first_year = 1998;
    int picks_per_year = 210;
    int teams = 30;
    double never_played_rate = 0.54;
    double css_noise = 0.6;
    double team_noise = 0.3;
    double outcome_noise = 0.5;
    /// Fraction of each class (the tail of the CSS order) left unranked.
    double unranked_rate = 0.05;
    double quality_decay = 1.0;
    /// Factors used to interleave the four CSS category lists. With these
    /// factors CESCIN reproduces the latent CSS order exactly.
    CategoryFactors category_factors{1.6, 16.0, 3.5, 32.0};

    /// Throws ConfigError for out-of-range parameters.
    void validate() const;
};

std::vector<DraftClass> generate_synthetic_draft(const SynthConfig& cfg);

/// Portable standard-normal draws (Box-Muller over mt19937_64).
std::vector<double> standard_normal_sample(std::uint64_t seed, std::size_t n);

} // namespace draftval::synth
