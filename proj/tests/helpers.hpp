#pragma once

#include "draftval/core_model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace testutil {

inline draftval::PlayerRecord player(int selection, draftval::Position pos, double toi, int gp, double gvt,
                                     draftval::CssCategory cat = draftval::CssCategory::Unranked,
                                     std::optional<int> cat_rank = std::nullopt, int year = 2000) {
    draftval::PlayerRecord r;
    r.year = year;
    r.selection = selection;
    r.team = "T" + std::to_string((selection - 1) % 30 + 1);
    r.name = "P" + std::to_string(selection);
    r.position = pos;
    r.css_category = cat;
    r.css_category_rank = cat_rank;
    r.gp7 = gp;
    r.toi7 = toi;
    r.gvt7 = gvt;
    r.played = gp > 0;
    return r;
}

} // namespace testutil
