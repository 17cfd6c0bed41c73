#pragma once

#include "draftval/core_model.hpp"

#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <vector>

namespace draftval {

/// Column names of the draft CSV, in the order they are written.
inline constexpr const char* kCsvHeader = "year,selection,team,name,position,css_category,css_category_rank,gp7,toi7,gvt7";

struct IngestResult {
    std::vector<DraftClass> classes;
    /// Informational notes: dropped picks beyond 210, missing selections.
    std::vector<std::string> notes;
};

/// Parses a draft CSV. The header is required (columns may appear in any
/// order); empty cells mean "absent". Row-level problems throw DataError
/// with the 1-based line number.
IngestResult ingest(std::istream& in, const ImputationConfig& imputation = {});
IngestResult ingest_file(const std::filesystem::path& path, const ImputationConfig& imputation = {});

/// Writes records in kCsvHeader layout; re-ingesting the text yields the
/// same records.
std::string emit_csv(std::span<const DraftClass> classes);

/// Splits one CSV line, honouring double-quoted fields.
std::vector<std::string> split_csv_line(const std::string& line);

} // namespace draftval
