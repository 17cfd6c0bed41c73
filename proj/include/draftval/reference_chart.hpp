#pragma once

#include "draftval/valuation.hpp"

namespace draftval {

/// The published 210-pick NHL draft value chart (1998-2002 drafts,
/// first-seven-season TOI), embedded verbatim.
const ValueChart& reference_chart();

} // namespace draftval
