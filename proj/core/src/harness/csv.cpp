#include "rcpde/harness/csv.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "rcpde/errors.hpp"

namespace rcpde::harness {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_csv(std::ostream& os, const CsvTable& table, const std::string& timestamp) {
    if (!timestamp.empty()) os << "# generated: " << timestamp << '\n';
    for (const auto& c : table.comments) os << "# " << c << '\n';
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        os << (i ? "," : "") << table.header[i];
    }
    os << '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.header.size()) {
            throw GridMismatch("csv row width does not match header of '" + table.name + "'");
        }
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
        os << '\n';
    }
}

std::string write_csv_file(const std::string& dir, const CsvTable& table,
                           const std::string& timestamp) {
    std::filesystem::create_directories(dir);
    const auto path = (std::filesystem::path(dir) / (table.name + ".csv")).string();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    write_csv(out, table, timestamp);
    return path;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace rcpde::harness
