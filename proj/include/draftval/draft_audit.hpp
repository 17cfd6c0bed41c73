#pragma once

#include "draftval/cescin.hpp"
#include "draftval/core_model.hpp"

#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace draftval {

enum class Ordering { Team, Css };
enum class RoundBand { All, Early, Late };

std::string_view to_string(Ordering o);
std::string_view to_string(RoundBand b);

/// One pick of a replayed draft.
struct PickFlag {
    /// Slot of the pick in the replayed ordering: actual selection for the
    /// team ordering, css_rank for the CSS ordering.
    int slot = 0;
    /// Index of the picked player in DraftClass::records().
    std::size_t record = 0;
    bool optimal = false;
    bool nearly_optimal = false;
};

/// Replays a draft in `pick_order` (record indices). At every pick the
/// available pool is the not-yet-taken players at the picked player's exact
/// Position, including the picked player. A pick is optimal when its metric
/// equals the pool maximum and nearly optimal when it is >= max - half_sd.
std::vector<PickFlag> replay_flags(std::span<const PlayerRecord> records,
                                   std::span<const std::size_t> pick_order,
                                   std::span<const int> slots, Metric metric, double half_sd);

/// Convenience overload: the team ordering replays by selection, the CSS
/// ordering by css_rank.
std::vector<PickFlag> replay_flags(const DraftClass& dc, const CssOrdering& css, Ordering ordering,
                                   Metric metric, double half_sd);

struct AuditConfig {
    /// Last selection (or CSS slot) counted in the early band (rounds 1-3).
    int early_last_slot = 90;
};

struct AuditCell {
    int picks = 0;
    int optimal = 0;
    int nearly_optimal = 0;

    double optimal_pct() const { return picks ? 100.0 * optimal / picks : 0.0; }
    double nearly_optimal_pct() const { return picks ? 100.0 * nearly_optimal / picks : 0.0; }
};

struct AuditKey {
    Metric metric;
    Ordering ordering;
    RoundBand band;
    auto operator<=>(const AuditKey&) const = default;
};

struct AuditReport {
    std::map<AuditKey, AuditCell> cells;
    /// Half of the pooled (n-1) standard deviation, per metric.
    std::map<Metric, double> half_sd;

    const AuditCell& at(Metric m, Ordering o, RoundBand b) const { return cells.at({m, o, b}); }
};

/// Replays every class under both orderings for every requested metric and
/// aggregates pick flags over all years, overall and by round band.
/// `orderings` is aligned with `classes`.
AuditReport audit(std::span<const DraftClass> classes, std::span<const CssOrdering> orderings,
                  std::span<const Metric> metrics, const AuditConfig& cfg = {});

std::string audit_to_json(const AuditReport& report);
/// metric,ordering,rounds,picks,optimal_pct,nearly_optimal_pct
std::string audit_to_csv(const AuditReport& report);

} // namespace draftval
