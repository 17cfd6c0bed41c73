#include "draftval/cescin.hpp"

#include "draftval/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace draftval {

namespace {

template <typename Factors>
auto& factor_ref(Factors& f, CssCategory c) {
    switch (c) {
    case CssCategory::NaSkater: return f.na_skater;
    case CssCategory::NaGoalie: return f.na_goalie;
    case CssCategory::EuSkater: return f.eu_skater;
    case CssCategory::EuGoalie: return f.eu_goalie;
    case CssCategory::Unranked: break;
    }
    throw DataError("UNRANKED has no CESCIN factor");
}

} // namespace

double CategoryFactors::at(CssCategory c) const { return factor_ref(*this, c); }

double& CategoryFactors::at(CssCategory c) { return factor_ref(*this, c); }

void CategoryFactors::validate() const {
    for (auto c : kRankedCategories) {
        const double f = at(c);
        if (!(f > 0.0) || !std::isfinite(f))
            throw ConfigError("CESCIN factor for " + std::string(to_string(c)) + " must be positive");
    }
}

std::vector<std::size_t> CssOrdering::pick_order() const {
    std::vector<std::size_t> order(css_rank.size());
    for (std::size_t i = 0; i < css_rank.size(); ++i)
        order[static_cast<std::size_t>(css_rank[i] - 1)] = i;
    return order;
}

CategoryFactors estimate_category_factors(std::span<const DraftClass> classes) {
    struct Acc {
        double rs = 0.0;
        double rr = 0.0;
        int n = 0;
    };
    std::array<Acc, 4> acc{};
    for (const auto& dc : classes) {
        for (const auto& r : dc.records()) {
            if (r.css_category == CssCategory::Unranked)
                continue;
            auto& a = acc[static_cast<std::size_t>(r.css_category)];
            const double rank = *r.css_category_rank;
            a.rs += rank * r.selection;
            a.rr += rank * rank;
            ++a.n;
        }
    }
    CategoryFactors f;
    for (auto c : kRankedCategories) {
        const auto& a = acc[static_cast<std::size_t>(c)];
        if (a.n < 2)
            throw DataError("cannot estimate CESCIN factor for " + std::string(to_string(c)) + ": " +
                            std::to_string(a.n) + " ranked draftee(s), need at least 2");
        f.at(c) = a.rs / a.rr;
    }
    return f;
}

std::map<int, CategoryFactors> estimate_category_factors_per_year(std::span<const DraftClass> classes) {
    std::map<int, CategoryFactors> out;
    for (const auto& dc : classes)
        out[dc.year()] = estimate_category_factors(std::span<const DraftClass>(&dc, 1));
    return out;
}

CssOrdering css_ordering(const DraftClass& dc, const CategoryFactors& factors) {
    const std::size_t n = dc.size();
    CssOrdering out;
    out.cescin_value.assign(n, 0.0);
    out.css_rank.assign(n, 0);

    double max_ranked = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& r = dc[i];
        if (r.css_category == CssCategory::Unranked)
            continue;
        out.cescin_value[i] = cescin_value(*r.css_category_rank, factors.at(r.css_category));
        max_ranked = std::max(max_ranked, out.cescin_value[i]);
    }
    // Records are sorted by selection, so k follows actual selection order.
    int k = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (dc[i].css_category == CssCategory::Unranked)
            out.cescin_value[i] = max_ranked + static_cast<double>(++k);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (out.cescin_value[a] != out.cescin_value[b])
            return out.cescin_value[a] < out.cescin_value[b];
        return dc[a].selection < dc[b].selection;
    });
    for (std::size_t pos = 0; pos < n; ++pos)
        out.css_rank[order[pos]] = static_cast<int>(pos) + 1;
    return out;
}

} // namespace draftval
