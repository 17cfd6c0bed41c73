#include "draftval/io.hpp"

#include "draftval/errors.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace draftval {

namespace {

constexpr std::array<const char*, 10> kColumns{"year", "selection", "team", "name", "position",
                                               "css_category", "css_category_rank", "gp7", "toi7", "gvt7"};

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void row_error(std::size_t line, const std::string& msg) {
    throw DataError("line " + std::to_string(line) + ": " + msg);
}

int parse_int(const std::string& s, std::size_t line, const char* col) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        row_error(line, std::string("column '") + col + "': cannot parse integer '" + s + "'");
    return v;
}

double parse_double(const std::string& s, std::size_t line, const char* col) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        row_error(line, std::string("column '") + col + "': cannot parse number '" + s + "'");
    return v;
}

std::string format_double(double v) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

std::string quote_if_needed(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(std::move(cur));
    return out;
}

IngestResult ingest(std::istream& in, const ImputationConfig& imputation) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++line_no;
        if (!trim(line).empty()) {
            header = split_csv_line(line);
            break;
        }
    }
    if (header.empty())
        throw DataError("missing header (empty input)");

    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < header.size(); ++i)
        col[trim(header[i])] = i;
    for (const char* c : kColumns)
        if (!col.count(c))
            throw DataError("line " + std::to_string(line_no) + ": header lacks column '" + c + "'");

    IngestResult result;
    std::vector<PlayerRecord> records;
    std::map<std::pair<int, int>, std::size_t> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty())
            continue;
        const auto cells = split_csv_line(line);
        if (cells.size() != header.size())
            row_error(line_no, "expected " + std::to_string(header.size()) + " fields, got " +
                                   std::to_string(cells.size()));
        auto cell = [&](const char* name) { return trim(cells[col.at(name)]); };

        RawRecord raw;
        try {
            raw.year = parse_int(cell("year"), line_no, "year");
            raw.selection = parse_int(cell("selection"), line_no, "selection");
            raw.team = cell("team");
            raw.name = cell("name");
            raw.position = parse_position(cell("position"));
            raw.css_category = parse_css_category(cell("css_category"));
            if (const auto s = cell("css_category_rank"); !s.empty())
                raw.css_category_rank = parse_int(s, line_no, "css_category_rank");
            raw.gp7 = parse_int(cell("gp7"), line_no, "gp7");
            if (const auto s = cell("toi7"); !s.empty())
                raw.toi7 = parse_double(s, line_no, "toi7");
            if (const auto s = cell("gvt7"); !s.empty())
                raw.gvt7 = parse_double(s, line_no, "gvt7");
        } catch (const DataError& e) {
            const std::string what = e.what();
            if (what.rfind("line ", 0) == 0)
                throw;
            row_error(line_no, what);
        }

        const auto key = std::make_pair(raw.year, raw.selection);
        if (const auto it = seen.find(key); it != seen.end())
            row_error(line_no, "duplicate selection " + std::to_string(raw.selection) + " in year " +
                                   std::to_string(raw.year) + " (first seen on line " +
                                   std::to_string(it->second) + ")");
        seen.emplace(key, line_no);

        try {
            records.push_back(normalize_record(raw, imputation));
        } catch (const DataError& e) {
            row_error(line_no, e.what());
        }
    }
    if (records.empty())
        throw DataError("no data rows");

    result.classes = build_draft_classes(std::move(records), &result.notes);
    for (const auto& dc : result.classes)
        for (int s : dc.missing_selections())
            result.notes.push_back("year " + std::to_string(dc.year()) + ": selection " + std::to_string(s) +
                                   " absent (accepted as an invalidated pick)");
    return result;
}

IngestResult ingest_file(const std::filesystem::path& path, const ImputationConfig& imputation) {
    std::ifstream in(path);
    if (!in)
        throw DataError("cannot open " + path.string());
    return ingest(in, imputation);
}

std::string emit_csv(std::span<const DraftClass> classes) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const auto& dc : classes) {
        for (const auto& r : dc.records()) {
            out << r.year << ',' << r.selection << ',' << quote_if_needed(r.team) << ','
                << quote_if_needed(r.name) << ',' << to_string(r.position) << ',' << to_string(r.css_category)
                << ',';
            if (r.css_category_rank)
                out << *r.css_category_rank;
            out << ',' << r.gp7 << ',' << format_double(r.toi7) << ',' << format_double(r.gvt7) << '\n';
        }
    }
    return out.str();
}

} // namespace draftval
