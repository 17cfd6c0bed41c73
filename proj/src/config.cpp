#include "draftval/config.hpp"

#include "draftval/errors.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <string>

namespace draftval {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string& v) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size())
        throw ConfigError("expected a number, got '" + v + "'");
    return out;
}

int to_int(const std::string& v) {
    int out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size())
        throw ConfigError("expected an integer, got '" + v + "'");
    return out;
}

bool to_bool(const std::string& v) {
    if (v == "true" || v == "1" || v == "yes")
        return true;
    if (v == "false" || v == "0" || v == "no")
        return false;
    throw ConfigError("expected true/false, got '" + v + "'");
}

CssCategory factor_key(const std::string& k) {
    if (k == "na_skater") return CssCategory::NaSkater;
    if (k == "na_goalie") return CssCategory::NaGoalie;
    if (k == "eu_skater") return CssCategory::EuSkater;
    if (k == "eu_goalie") return CssCategory::EuGoalie;
    throw ConfigError("unknown CESCIN category '" + k + "'");
}

// {na_skater: 1.2, na_goalie: 9, eu_skater: 2.5, eu_goalie: 20}
CategoryFactors parse_factor_block(const std::string& v) {
    if (v.size() < 2 || v.front() != '{' || v.back() != '}')
        throw ConfigError("cescin.factors expects {na_skater: x, na_goalie: x, eu_skater: x, eu_goalie: x}");
    CategoryFactors f;
    int seen = 0;
    std::string body = v.substr(1, v.size() - 2);
    std::size_t start = 0;
    while (start <= body.size()) {
        const auto end = std::min(body.find(',', start), body.size());
        const std::string item = trim(std::string_view(body).substr(start, end - start));
        if (!item.empty()) {
            const auto colon = item.find(':');
            if (colon == std::string::npos)
                throw ConfigError("cescin.factors entry '" + item + "' lacks ':'");
            f.at(factor_key(trim(item.substr(0, colon)))) = to_double(trim(item.substr(colon + 1)));
            ++seen;
        }
        start = end + 1;
    }
    if (seen != 4)
        throw ConfigError("cescin.factors must give all four categories");
    return f;
}

using Setter = std::function<void(RunConfig&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table = [] {
        std::map<std::string, Setter> t;
        t["imputation.never_played_gvt"] = [](RunConfig& c, const std::string& v) { c.imputation.never_played_gvt = to_double(v); };
        t["imputation.goalie_minutes_per_game"] = [](RunConfig& c, const std::string& v) { c.imputation.goalie_minutes_per_game = to_double(v); };
        t["cescin.factors"] = [](RunConfig& c, const std::string& v) { c.factors = parse_factor_block(v); };
        for (const char* cat : {"na_skater", "na_goalie", "eu_skater", "eu_goalie"}) {
            const std::string name = cat;
            t["cescin.factors." + name] = [name](RunConfig& c, const std::string& v) {
                if (!c.factors)
                    c.factors = CategoryFactors{};
                c.factors->at(factor_key(name)) = to_double(v);
            };
        }
        t["cescin.per_year"] = [](RunConfig& c, const std::string& v) { c.per_year_factors = to_bool(v); };
        t["audit.early_last_slot"] = [](RunConfig& c, const std::string& v) { c.audit.early_last_slot = to_int(v); };
        t["loess.span"] = [](RunConfig& c, const std::string& v) { c.valuation.loess.span = to_double(v); };
        t["loess.degree"] = [](RunConfig& c, const std::string& v) { c.valuation.loess.degree = to_int(v); };
        t["valuation.expectation"] = [](RunConfig& c, const std::string& v) {
            if (v == "css") c.valuation.basis = ExpectationBasis::Css;
            else if (v == "team") c.valuation.basis = ExpectationBasis::Team;
            else throw ConfigError("valuation.expectation must be css or team");
        };
        t["valuation.by_position"] = [](RunConfig& c, const std::string& v) { c.by_position = to_bool(v); };
        t["dollars.salary_per_game"] = [](RunConfig& c, const std::string& v) { c.valuation.dollars.salary_per_game = to_double(v); };
        t["dollars.dollars_per_goal"] = [](RunConfig& c, const std::string& v) { c.valuation.dollars.dollars_per_goal = to_double(v); };
        t["dollars.minutes_per_game"] = [](RunConfig& c, const std::string& v) { c.valuation.dollars.minutes_per_game = to_double(v); };
        t["dollars.picks_per_season"] = [](RunConfig& c, const std::string& v) { c.valuation.dollars.picks_per_season = to_double(v); };
        t["split.early_first"] = [](RunConfig& c, const std::string& v) { c.split.early_first = to_int(v); };
        t["split.early_last"] = [](RunConfig& c, const std::string& v) { c.split.early_last = to_int(v); };
        t["split.late_first"] = [](RunConfig& c, const std::string& v) { c.split.late_first = to_int(v); };
        t["split.late_last"] = [](RunConfig& c, const std::string& v) { c.split.late_last = to_int(v); };
        t["teams.gain_basis"] = [](RunConfig& c, const std::string& v) {
            if (v == "realized") c.team_basis = TeamGainBasis::Realized;
            else if (v == "model") c.team_basis = TeamGainBasis::Model;
            else throw ConfigError("teams.gain_basis must be realized or model");
        };
        t["teams.permutation_iterations"] = [](RunConfig& c, const std::string& v) { c.permutation_iterations = to_int(v); };
        t["metric"] = [](RunConfig& c, const std::string& v) { c.metrics = parse_metric_selection(v); };
        t["synth.seed"] = [](RunConfig& c, const std::string& v) { c.synth.seed = std::stoull(v); };
        t["synth.years"] = [](RunConfig& c, const std::string& v) { c.synth.years = to_int(v); };
        t["synth.first_year"] = [](RunConfig& c, const std::string& v) { c.synth.first_year = to_int(v); };
        t["synth.picks_per_year"] = [](RunConfig& c, const std::string& v) { c.synth.picks_per_year = to_int(v); };
        t["synth.teams"] = [](RunConfig& c, const std::string& v) { c.synth.teams = to_int(v); };
        t["synth.never_played_rate"] = [](RunConfig& c, const std::string& v) { c.synth.never_played_rate = to_double(v); };
        t["synth.css_noise"] = [](RunConfig& c, const std::string& v) { c.synth.css_noise = to_double(v); };
        t["synth.team_noise"] = [](RunConfig& c, const std::string& v) { c.synth.team_noise = to_double(v); };
        t["synth.outcome_noise"] = [](RunConfig& c, const std::string& v) { c.synth.outcome_noise = to_double(v); };
        t["synth.unranked_rate"] = [](RunConfig& c, const std::string& v) { c.synth.unranked_rate = to_double(v); };
        t["synth.quality_decay"] = [](RunConfig& c, const std::string& v) { c.synth.quality_decay = to_double(v); };
        return t;
    }();
    return table;
}

} // namespace

std::vector<Metric> parse_metric_selection(std::string_view s) {
    if (s == "all")
        return {kAllMetrics.begin(), kAllMetrics.end()};
    return {parse_metric(s)};
}

void RunConfig::validate() const {
    valuation.loess.validate();
    valuation.dollars.validate();
    if (factors)
        factors->validate();
    if (audit.early_last_slot < 0)
        throw ConfigError("audit.early_last_slot must be >= 0");
    if (permutation_iterations < 0)
        throw ConfigError("teams.permutation_iterations must be >= 0");
    if (!(imputation.goalie_minutes_per_game > 0.0))
        throw ConfigError("imputation.goalie_minutes_per_game must be positive");
    if (metrics.empty())
        throw ConfigError("no metrics selected");
    synth.validate();
}

void apply_config(std::istream& in, RunConfig& cfg) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const std::string text = trim(line);
        if (text.empty())
            continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(std::string_view(text).substr(0, eq));
        const std::string value = trim(std::string_view(text).substr(eq + 1));
        const auto it = setters().find(key);
        if (it == setters().end())
            throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        try {
            it->second(cfg, value);
        } catch (const std::exception& e) {
            throw ConfigError("config line " + std::to_string(line_no) + " (" + key + "): " + e.what());
        }
    }
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file " + path.string());
    RunConfig cfg;
    apply_config(in, cfg);
    cfg.validate();
    return cfg;
}

} // namespace draftval
