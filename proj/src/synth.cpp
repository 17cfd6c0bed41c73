#include "draftval/synth.hpp"

#include "draftval/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>

namespace draftval::synth {

namespace {

constexpr int kMaxGames = 7 * 82;

// Distribution code is written out here so that a seed produces the same
// league with any standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1p-53; }

    double normal() {
        if (spare_) {
            const double v = *spare_;
            spare_.reset();
            return v;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform()));
        const double theta = 2.0 * std::numbers::pi * uniform();
        spare_ = r * std::sin(theta);
        return r * std::cos(theta);
    }

private:
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

double logistic(double t) {
    return 1.0 / (1.0 + std::exp(-t));
}

constexpr double kPlaySlope = 2.0;

// Intercept giving a mean never-played probability equal to `rate`.
double calibrate_intercept(const std::vector<double>& z, double rate) {
    auto never_played = [&](double alpha) {
        double s = 0.0;
        for (double v : z)
            s += 1.0 - logistic(alpha + kPlaySlope * v);
        return s / static_cast<double>(z.size());
    };
    double lo = -60.0, hi = 60.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (never_played(mid) > rate)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<std::size_t> order_by_score_desc(const std::vector<double>& score) {
    std::vector<std::size_t> idx(score.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return score[a] > score[b]; });
    return idx;
}

struct CategorySlot {
    CssCategory category;
    int rank;
};

// Category and within-category rank for every position of the CSS order.
std::vector<CategorySlot> interleave_categories(int n, const CategoryFactors& f) {
    std::array<int, 4> next{1, 1, 1, 1};
    std::vector<CategorySlot> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        std::size_t best = 0;
        double best_value = 0.0;
        for (std::size_t k = 0; k < kRankedCategories.size(); ++k) {
            const double v = cescin_value(next[k], f.at(kRankedCategories[k]));
            if (k == 0 || v < best_value) {
                best = k;
                best_value = v;
            }
        }
        out.push_back({kRankedCategories[best], next[best]++});
    }
    return out;
}

Position skater_position(double u) {
    if (u < 0.25) return Position::C;
    if (u < 0.40) return Position::L;
    if (u < 0.55) return Position::R;
    if (u < 0.62) return Position::F;
    return Position::D;
}

double round1(double v) {
    return std::round(v * 10.0) / 10.0;
}

std::string team_id(int index) {
    std::string s = std::to_string(index + 1);
    if (s.size() < 2)
        s.insert(0, "0");
    return "T" + s;
}

} // namespace

void SynthConfig::validate() const {
    if (years < 1)
        throw ConfigError("synth.years must be >= 1");
    if (picks_per_year < 2 || picks_per_year > kMaxSelection)
        throw ConfigError("synth.picks_per_year must lie in 2..210");
    if (teams < 1)
        throw ConfigError("synth.teams must be >= 1");
    if (!(never_played_rate >= 0.0 && never_played_rate <= 1.0))
        throw ConfigError("synth.never_played_rate must lie in [0, 1]");
    if (!(unranked_rate >= 0.0 && unranked_rate <= 1.0))
        throw ConfigError("synth.unranked_rate must lie in [0, 1]");
    if (!(css_noise >= 0.0 && team_noise >= 0.0 && outcome_noise >= 0.0))
        throw ConfigError("synth noise parameters must be >= 0");
    if (!(quality_decay > 0.0))
        throw ConfigError("synth.quality_decay must be positive");
    category_factors.validate();
}

std::vector<DraftClass> generate_synthetic_draft(const SynthConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.seed);
    const int n = cfg.picks_per_year;
    const auto nz = static_cast<std::size_t>(n);
    const auto slots = interleave_categories(n, cfg.category_factors);
    const auto unranked = static_cast<std::size_t>(std::llround(cfg.unranked_rate * n));

    std::vector<DraftClass> classes;
    for (int y = 0; y < cfg.years; ++y) {
        const int year = cfg.first_year + y;
        std::vector<double> talent(nz), team_score(nz), css_score(nz), outcome(nz);
        for (std::size_t i = 0; i < nz; ++i) {
            talent[i] = -cfg.quality_decay * std::log(static_cast<double>(i + 1));
            team_score[i] = talent[i] + cfg.team_noise * rng.normal();
            css_score[i] = talent[i] + cfg.css_noise * rng.normal();
            outcome[i] = talent[i] + cfg.outcome_noise * rng.normal();
        }
        const auto team_order = order_by_score_desc(team_score);
        const auto css_order = order_by_score_desc(css_score);
        const double alpha = calibrate_intercept(outcome, cfg.never_played_rate);

        std::vector<RawRecord> raw(nz);
        for (std::size_t pos = 0; pos < nz; ++pos) {
            auto& r = raw[team_order[pos]];
            r.year = year;
            r.selection = static_cast<int>(pos) + 1;
            r.team = team_id(static_cast<int>(pos) % cfg.teams);
        }
        for (std::size_t pos = 0; pos < nz; ++pos) {
            const std::size_t i = css_order[pos];
            auto& r = raw[i];
            const auto& slot = slots[pos];
            r.name = "P" + std::to_string(year) + "-" + std::to_string(i + 1);
            const bool goalie = is_goalie_category(slot.category);
            r.position = goalie ? Position::G : skater_position(rng.uniform());
            if (pos + unranked < nz) {
                r.css_category = slot.category;
                r.css_category_rank = slot.rank;
            }
        }
        for (std::size_t i = 0; i < nz; ++i) {
            auto& r = raw[i];
            const double z = outcome[i];
            const bool played = rng.uniform() < logistic(alpha + kPlaySlope * z);
            const double e1 = rng.normal(), e2 = rng.normal(), e3 = rng.normal();
            if (!played)
                continue;
            const auto games = std::llround(450.0 * std::exp(0.8 * z + 0.3 * e1));
            r.gp7 = static_cast<int>(std::clamp<long long>(games, 1, kMaxGames));
            const double mpg = std::clamp(15.0 * std::exp(0.05 * z + 0.15 * e2), 5.0, 28.0);
            if (r.position != Position::G)
                r.toi7 = round1(r.gp7 * mpg);
            r.gvt7 = round1(std::max(-27.7, -4.0 + 0.12 * r.gp7 * std::exp(0.25 * e3) + 2.0 * e3));
        }

        std::vector<PlayerRecord> records;
        records.reserve(nz);
        for (const auto& r : raw)
            records.push_back(normalize_record(r));
        classes.emplace_back(year, std::move(records));
    }
    return classes;
}

std::vector<double> standard_normal_sample(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    std::vector<double> out(n);
    for (auto& v : out)
        v = rng.normal();
    return out;
}

} // namespace draftval::synth
