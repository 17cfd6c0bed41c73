#pragma once

#include <stdexcept>
#include <string>

namespace draftval {

/// Malformed or inconsistent input data (bad CSV rows, invalid records).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerical routine could not produce a result (degenerate sample,
/// too few points for a fit, non-positive chart anchor, ...).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad configuration or command-line usage.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace draftval
