#pragma once

#include <iosfwd>

namespace draftval::cli {

/// Entry point of the draftval command; returns the process exit code
/// (0 ok, 1 usage, 2 data, 3 numeric).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace draftval::cli
