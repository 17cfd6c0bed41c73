#pragma once

#include "draftval/core_model.hpp"

#include <map>
#include <span>
#include <vector>

namespace draftval {

/// Multiplier applied to a within-category CSS rank to place it on the
/// common integrated scale.
struct CategoryFactors {
    double na_skater = 1.0;
    double na_goalie = 1.0;
    double eu_skater = 1.0;
    double eu_goalie = 1.0;

    double at(CssCategory c) const;
    double& at(CssCategory c);
    /// Throws ConfigError unless every factor is positive and finite.
    void validate() const;
};

/// Integrated CSS position of every player of one draft class. Entries are
/// aligned with DraftClass::records().
struct CssOrdering {
    std::vector<double> cescin_value;
    std::vector<int> css_rank;

    std::size_t size() const { return css_rank.size(); }
    /// Record indices in ascending css_rank.
    std::vector<std::size_t> pick_order() const;
};

/// Pooled through-origin slope of actual selection on category rank, per
/// category: sum(rank * selection) / sum(rank^2). Throws DataError naming a
/// category with fewer than two ranked draftees.
CategoryFactors estimate_category_factors(std::span<const DraftClass> classes);

/// Same estimate, computed separately for every year.
std::map<int, CategoryFactors> estimate_category_factors_per_year(std::span<const DraftClass> classes);

inline double cescin_value(int category_rank, double factor) {
    return static_cast<double>(category_rank) * factor;
}

/// Ranked players get rank * factor; unranked players are placed after the
/// largest ranked value at +1, +2, ... in order of actual selection. Ranks
/// ascend with the value, ties going to the earlier actual selection.
CssOrdering css_ordering(const DraftClass& dc, const CategoryFactors& factors);

} // namespace draftval
