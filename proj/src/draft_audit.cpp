#include "draftval/draft_audit.hpp"

#include "draftval/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace draftval {

std::string_view to_string(Ordering o) {
    return o == Ordering::Team ? "team" : "css";
}

std::string_view to_string(RoundBand b) {
    switch (b) {
    case RoundBand::All: return "all";
    case RoundBand::Early: return "1-3";
    case RoundBand::Late: return "4-7";
    }
    return "?";
}

std::vector<PickFlag> replay_flags(std::span<const PlayerRecord> records,
                                   std::span<const std::size_t> pick_order,
                                   std::span<const int> slots, Metric metric, double half_sd) {
    if (pick_order.size() != records.size() || slots.size() != records.size())
        throw DataError("replay_flags: ordering does not cover the draft class");
    if (!(half_sd >= 0.0))
        throw NumericError("replay_flags: half_sd must be non-negative");

    std::vector<bool> taken(records.size(), false);
    std::vector<PickFlag> flags;
    flags.reserve(records.size());
    for (std::size_t k = 0; k < pick_order.size(); ++k) {
        const std::size_t idx = pick_order[k];
        if (idx >= records.size() || taken[idx])
            throw DataError("replay_flags: pick order is not a permutation");
        const auto& picked = records[idx];
        double best = picked.metric(metric);
        for (std::size_t j = 0; j < records.size(); ++j)
            if (!taken[j] && records[j].position == picked.position)
                best = std::max(best, records[j].metric(metric));
        const double value = picked.metric(metric);
        flags.push_back({slots[k], idx, value >= best, value >= best - half_sd});
        taken[idx] = true;
    }
    return flags;
}

std::vector<PickFlag> replay_flags(const DraftClass& dc, const CssOrdering& css, Ordering ordering,
                                   Metric metric, double half_sd) {
    const auto recs = dc.records();
    std::vector<std::size_t> order;
    std::vector<int> slots;
    if (ordering == Ordering::Team) {
        for (std::size_t i = 0; i < recs.size(); ++i) {
            order.push_back(i);
            slots.push_back(recs[i].selection);
        }
    } else {
        if (css.size() != recs.size())
            throw DataError("replay_flags: CSS ordering does not match the draft class");
        order = css.pick_order();
        for (std::size_t k = 0; k < order.size(); ++k)
            slots.push_back(static_cast<int>(k) + 1);
    }
    return replay_flags(recs, order, slots, metric, half_sd);
}

AuditReport audit(std::span<const DraftClass> classes, std::span<const CssOrdering> orderings,
                  std::span<const Metric> metrics, const AuditConfig& cfg) {
    if (orderings.size() != classes.size())
        throw DataError("audit: one CSS ordering per draft class is required");

    AuditReport report;
    for (Metric m : metrics) {
        std::vector<double> pooled;
        for (const auto& dc : classes)
            for (const auto& r : dc.records())
                pooled.push_back(r.metric(m));
        const double half_sd = summarize_values(std::move(pooled)).sd / 2.0;
        report.half_sd[m] = half_sd;

        for (Ordering o : {Ordering::Team, Ordering::Css}) {
            for (RoundBand b : {RoundBand::All, RoundBand::Early, RoundBand::Late})
                report.cells[{m, o, b}] = {};
            for (std::size_t c = 0; c < classes.size(); ++c) {
                for (const auto& f : replay_flags(classes[c], orderings[c], o, m, half_sd)) {
                    const RoundBand band = f.slot <= cfg.early_last_slot ? RoundBand::Early : RoundBand::Late;
                    for (RoundBand b : {RoundBand::All, band}) {
                        auto& cell = report.cells[{m, o, b}];
                        ++cell.picks;
                        cell.optimal += f.optimal;
                        cell.nearly_optimal += f.nearly_optimal;
                    }
                }
            }
        }
    }
    return report;
}

std::string audit_to_json(const AuditReport& report) {
    nlohmann::json j;
    for (const auto& [m, h] : report.half_sd)
        j["half_sd"][std::string(to_string(m))] = h;
    j["cells"] = nlohmann::json::array();
    for (const auto& [key, cell] : report.cells) {
        j["cells"].push_back({{"metric", to_string(key.metric)},
                              {"ordering", to_string(key.ordering)},
                              {"rounds", to_string(key.band)},
                              {"picks", cell.picks},
                              {"optimal_pct", cell.optimal_pct()},
                              {"nearly_optimal_pct", cell.nearly_optimal_pct()}});
    }
    return j.dump(2);
}

std::string audit_to_csv(const AuditReport& report) {
    std::ostringstream out;
    out << "metric,ordering,rounds,picks,optimal_pct,nearly_optimal_pct\n";
    out.setf(std::ios::fixed);
    out.precision(2);
    for (const auto& [key, cell] : report.cells)
        out << to_string(key.metric) << ',' << to_string(key.ordering) << ',' << to_string(key.band) << ','
            << cell.picks << ',' << cell.optimal_pct() << ',' << cell.nearly_optimal_pct() << '\n';
    return out.str();
}

} // namespace draftval
