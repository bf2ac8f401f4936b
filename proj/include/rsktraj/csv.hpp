#pragma once

#include <string>
#include <vector>

namespace rsktraj::csv {

// Numeric table with a header row. All cells are doubles; counts and step
// indices are exact in 53 bits at every scale used here.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    bool operator==(const Table&) const = default;
};

// Shortest representation that round-trips a 64-bit float ('%.17g', '.' decimal).
std::string format_double(double v);

std::string to_string(const Table& table);
Table parse(const std::string& text);

// Writes to a temp file in the target directory, then renames into place.
void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace rsktraj::csv
