#include "draftval/core_model.hpp"

#include "draftval/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace draftval {

namespace {

std::string field_error(const RawRecord& raw, std::string_view field, std::string_view msg) {
    std::string out = "record (year ";
    out += std::to_string(raw.year);
    out += ", selection ";
    out += std::to_string(raw.selection);
    out += "): field '";
    out += field;
    out += "': ";
    out += msg;
    return out;
}

} // namespace

Position parse_position(std::string_view code) {
    if (code == "C") return Position::C;
    if (code == "D") return Position::D;
    if (code == "F") return Position::F;
    if (code == "G") return Position::G;
    if (code == "L") return Position::L;
    if (code == "R") return Position::R;
    throw DataError("invalid position code '" + std::string(code) + "' (expected C, D, F, G, L or R)");
}

CssCategory parse_css_category(std::string_view name) {
    if (name == "NA_SKATER") return CssCategory::NaSkater;
    if (name == "NA_GOALIE") return CssCategory::NaGoalie;
    if (name == "EU_SKATER") return CssCategory::EuSkater;
    if (name == "EU_GOALIE") return CssCategory::EuGoalie;
    if (name == "UNRANKED" || name.empty()) return CssCategory::Unranked;
    throw DataError("invalid css_category '" + std::string(name) + "'");
}

Metric parse_metric(std::string_view name) {
    if (name == "toi" || name == "TOI") return Metric::Toi;
    if (name == "gp" || name == "GP") return Metric::Gp;
    if (name == "gvt" || name == "GVT") return Metric::Gvt;
    throw ConfigError("unknown metric '" + std::string(name) + "'");
}

std::string_view to_string(Position p) {
    switch (p) {
    case Position::C: return "C";
    case Position::D: return "D";
    case Position::F: return "F";
    case Position::G: return "G";
    case Position::L: return "L";
    case Position::R: return "R";
    }
    return "?";
}

std::string_view to_string(PositionGroup g) {
    switch (g) {
    case PositionGroup::Forward: return "F";
    case PositionGroup::Defense: return "D";
    case PositionGroup::Goalie: return "G";
    }
    return "?";
}

std::string_view to_string(CssCategory c) {
    switch (c) {
    case CssCategory::NaSkater: return "NA_SKATER";
    case CssCategory::NaGoalie: return "NA_GOALIE";
    case CssCategory::EuSkater: return "EU_SKATER";
    case CssCategory::EuGoalie: return "EU_GOALIE";
    case CssCategory::Unranked: return "UNRANKED";
    }
    return "?";
}

std::string_view to_string(Metric m) {
    switch (m) {
    case Metric::Toi: return "toi";
    case Metric::Gp: return "gp";
    case Metric::Gvt: return "gvt";
    }
    return "?";
}

PositionGroup position_group(Position p) {
    switch (p) {
    case Position::D: return PositionGroup::Defense;
    case Position::G: return PositionGroup::Goalie;
    default: return PositionGroup::Forward;
    }
}

bool is_goalie_category(CssCategory c) {
    return c == CssCategory::NaGoalie || c == CssCategory::EuGoalie;
}

double PlayerRecord::metric(Metric m) const {
    switch (m) {
    case Metric::Toi: return toi7;
    case Metric::Gp: return static_cast<double>(gp7);
    case Metric::Gvt: return gvt7;
    }
    return 0.0;
}

PlayerRecord normalize_record(const RawRecord& raw, const ImputationConfig& cfg) {
    if (raw.selection < 1)
        throw DataError(field_error(raw, "selection", "must be >= 1"));

    const bool goalie = raw.position == Position::G;
    if (raw.css_category != CssCategory::Unranked) {
        if (goalie && !is_goalie_category(raw.css_category))
            throw DataError(field_error(raw, "css_category", "goalie carries a skater category"));
        if (!goalie && is_goalie_category(raw.css_category))
            throw DataError(field_error(raw, "css_category", "skater carries a goalie category"));
        if (!raw.css_category_rank)
            throw DataError(field_error(raw, "css_category_rank", "required for a ranked category"));
        if (*raw.css_category_rank < 1)
            throw DataError(field_error(raw, "css_category_rank", "must be >= 1"));
    } else if (raw.css_category_rank) {
        throw DataError(field_error(raw, "css_category_rank", "must be empty for UNRANKED"));
    }

    if (raw.gp7 < 0)
        throw DataError(field_error(raw, "gp7", "negative metric"));
    if (raw.toi7 && !(*raw.toi7 >= 0.0 && std::isfinite(*raw.toi7)))
        throw DataError(field_error(raw, "toi7", "negative or non-finite metric"));
    if (raw.gvt7 && !std::isfinite(*raw.gvt7))
        throw DataError(field_error(raw, "gvt7", "non-finite metric"));

    PlayerRecord rec;
    rec.year = raw.year;
    rec.selection = raw.selection;
    rec.team = raw.team;
    rec.name = raw.name;
    rec.position = raw.position;
    rec.css_category = raw.css_category;
    rec.css_category_rank = raw.css_category_rank;
    rec.gp7 = raw.gp7;
    rec.played = raw.gp7 > 0;

    if (!rec.played) {
        rec.gvt7 = cfg.never_played_gvt;
        rec.toi7 = 0.0;
        return rec;
    }
    if (!raw.gvt7)
        throw DataError(field_error(raw, "gvt7", "required for a player with gp7 > 0"));
    rec.gvt7 = *raw.gvt7;
    if (goalie) {
        rec.toi7 = cfg.goalie_minutes_per_game * raw.gp7;
    } else {
        if (!raw.toi7)
            throw DataError(field_error(raw, "toi7", "required for a skater with gp7 > 0"));
        rec.toi7 = *raw.toi7;
    }
    return rec;
}

RawRecord to_raw(const PlayerRecord& rec) {
    RawRecord raw;
    raw.year = rec.year;
    raw.selection = rec.selection;
    raw.team = rec.team;
    raw.name = rec.name;
    raw.position = rec.position;
    raw.css_category = rec.css_category;
    raw.css_category_rank = rec.css_category_rank;
    raw.gp7 = rec.gp7;
    raw.toi7 = rec.toi7;
    raw.gvt7 = rec.gvt7;
    return raw;
}

PlayerRecord normalize_record(const PlayerRecord& rec, const ImputationConfig& cfg) {
    return normalize_record(to_raw(rec), cfg);
}

DraftClass::DraftClass(int year, std::vector<PlayerRecord> records)
    : year_(year), records_(std::move(records)) {
    std::sort(records_.begin(), records_.end(),
              [](const PlayerRecord& a, const PlayerRecord& b) { return a.selection < b.selection; });
    for (std::size_t i = 0; i < records_.size(); ++i) {
        const auto& r = records_[i];
        if (r.year != year_)
            throw DataError("draft class " + std::to_string(year_) + " contains a record from year " +
                            std::to_string(r.year));
        if (r.selection < 1 || r.selection > kMaxSelection)
            throw DataError("draft class " + std::to_string(year_) + ": selection " +
                            std::to_string(r.selection) + " outside 1.." + std::to_string(kMaxSelection));
        if (i > 0 && records_[i - 1].selection == r.selection)
            throw DataError("draft class " + std::to_string(year_) + ": duplicate selection " +
                            std::to_string(r.selection));
    }
    if (missing_selections().size() > 1)
        throw DataError("draft class " + std::to_string(year_) + ": more than one missing selection");
}

std::vector<int> DraftClass::missing_selections() const {
    std::vector<int> out;
    int expected = 1;
    for (const auto& r : records_) {
        for (; expected < r.selection; ++expected)
            out.push_back(expected);
        expected = r.selection + 1;
    }
    return out;
}

std::vector<DraftClass> build_draft_classes(std::vector<PlayerRecord> records,
                                            std::vector<std::string>* warnings) {
    std::map<int, std::vector<PlayerRecord>> by_year;
    for (auto& r : records) {
        if (r.selection > kMaxSelection) {
            if (warnings)
                warnings->push_back("dropping year " + std::to_string(r.year) + " selection " +
                                    std::to_string(r.selection) + " (beyond pick " +
                                    std::to_string(kMaxSelection) + ")");
            continue;
        }
        by_year[r.year].push_back(std::move(r));
    }
    std::vector<DraftClass> out;
    out.reserve(by_year.size());
    for (auto& [year, recs] : by_year)
        out.emplace_back(year, std::move(recs));
    return out;
}

double sorted_quantile(std::span<const double> sorted, double p) {
    if (sorted.empty())
        throw NumericError("quantile of an empty sample");
    const double h = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

SummaryStats summarize_values(std::vector<double> values) {
    if (values.size() < 2)
        throw NumericError("summary needs at least 2 values, got " + std::to_string(values.size()));
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    SummaryStats s;
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : values)
        ss += (v - s.mean) * (v - s.mean);
    s.sd = std::sqrt(ss / (n - 1.0));
    s.median = sorted_quantile(values, 0.5);
    s.p75 = sorted_quantile(values, 0.75);
    s.max = values.back();
    return s;
}

SummaryStats summarize_metric(std::span<const DraftClass> classes, Metric metric) {
    std::vector<double> values;
    for (const auto& dc : classes)
        for (const auto& r : dc.records())
            values.push_back(r.metric(metric));
    if (values.empty())
        throw DataError("summarize_metric: no records");
    return summarize_values(std::move(values));
}

} // namespace draftval
