#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace draftval {

/// Picks beyond this slot are outside the analysed draft window.
inline constexpr int kMaxSelection = 210;

enum class Position { C, D, F, G, L, R };
enum class PositionGroup { Forward, Defense, Goalie };
enum class CssCategory { NaSkater, NaGoalie, EuSkater, EuGoalie, Unranked };
enum class Metric { Toi, Gp, Gvt };

inline constexpr std::array<Metric, 3> kAllMetrics{Metric::Toi, Metric::Gp, Metric::Gvt};
inline constexpr std::array<CssCategory, 4> kRankedCategories{
    CssCategory::NaSkater, CssCategory::NaGoalie, CssCategory::EuSkater, CssCategory::EuGoalie};

Position parse_position(std::string_view code);
CssCategory parse_css_category(std::string_view name);
Metric parse_metric(std::string_view name);

std::string_view to_string(Position p);
std::string_view to_string(PositionGroup g);
std::string_view to_string(CssCategory c);
std::string_view to_string(Metric m);

PositionGroup position_group(Position p);
bool is_goalie_category(CssCategory c);

/// Imputation constants applied by normalize_record.
struct ImputationConfig {
    double never_played_gvt = -30.0;
    double goalie_minutes_per_game = 20.0;
};

/// A drafted player as read from input, before imputation.
struct RawRecord {
    int year = 0;
    int selection = 0;
    std::string team;
    std::string name;
    Position position = Position::C;
    CssCategory css_category = CssCategory::Unranked;
    std::optional<int> css_category_rank;
    int gp7 = 0;
    std::optional<double> toi7;
    std::optional<double> gvt7;
};

/// A drafted player after imputation; all metrics are defined.
struct PlayerRecord {
    int year = 0;
    int selection = 0;
    std::string team;
    std::string name;
    Position position = Position::C;
    CssCategory css_category = CssCategory::Unranked;
    std::optional<int> css_category_rank;
    int gp7 = 0;
    double toi7 = 0.0;
    double gvt7 = 0.0;
    bool played = false;

    double metric(Metric m) const;
    PositionGroup group() const { return position_group(position); }

    bool operator==(const PlayerRecord&) const = default;
};

/// Validates a raw record and applies the imputation rules:
/// never-played players get gvt7 = never_played_gvt and toi7 = 0, and goalie
/// TOI is goalie_minutes_per_game * gp7. Throws DataError naming the field.
PlayerRecord normalize_record(const RawRecord& raw, const ImputationConfig& cfg = {});
PlayerRecord normalize_record(const PlayerRecord& rec, const ImputationConfig& cfg = {});

RawRecord to_raw(const PlayerRecord& rec);

/// All picks of one draft year, sorted by selection.
class DraftClass {
public:
    DraftClass() = default;
    /// Sorts by selection; throws DataError on duplicate selections, a
    /// selection outside 1..210, mixed years, or more than one gap in the
    /// selection sequence.
    DraftClass(int year, std::vector<PlayerRecord> records);

    int year() const { return year_; }
    std::span<const PlayerRecord> records() const { return records_; }
    std::size_t size() const { return records_.size(); }
    const PlayerRecord& operator[](std::size_t i) const { return records_[i]; }

    /// Selection numbers absent from 1..max(selection).
    std::vector<int> missing_selections() const;

private:
    int year_ = 0;
    std::vector<PlayerRecord> records_;
};

/// Groups records by year. Records with selection > 210 are dropped and
/// reported through `warnings` (if non-null).
std::vector<DraftClass> build_draft_classes(std::vector<PlayerRecord> records,
                                            std::vector<std::string>* warnings = nullptr);

struct SummaryStats {
    double median = 0.0;
    double mean = 0.0;
    double p75 = 0.0;
    double max = 0.0;
    double sd = 0.0;
};

/// Pooled summary of one metric; sd uses n-1 and quantiles interpolate
/// linearly between order statistics.
SummaryStats summarize_metric(std::span<const DraftClass> classes, Metric metric);
SummaryStats summarize_values(std::vector<double> values);

/// Linear-interpolation quantile of an ascending-sorted sample, p in [0,1].
double sorted_quantile(std::span<const double> sorted, double p);

} // namespace draftval
