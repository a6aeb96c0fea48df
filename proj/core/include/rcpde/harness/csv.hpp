#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcpde::harness {

/// A numeric table destined for one CSV file.
struct CsvTable {
    std::string name;                   // file stem, e.g. "table2"
    std::vector<std::string> comments;  // emitted as "# ..." lines before the header
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// Shortest decimal form that round-trips: 17 significant digits.
std::string format_double(double x);

/// Writes comment lines, the header row and data rows with LF endings.
/// When `timestamp` is nonempty a "# generated: <timestamp>" line comes first.
void write_csv(std::ostream& os, const CsvTable& table, const std::string& timestamp = {});

/// Writes <dir>/<name>.csv, creating `dir` if needed. Returns the path.
std::string write_csv_file(const std::string& dir, const CsvTable& table,
                           const std::string& timestamp = {});

/// Current UTC time in ISO-8601.
std::string utc_timestamp();

}  // namespace rcpde::harness
