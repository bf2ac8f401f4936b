#include "rsktraj/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rsktraj::csv {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string to_string(const Table& table) {
    std::string out;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) out += ',';
        out += table.header[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.header.size())
            throw std::invalid_argument("csv::to_string: row width mismatch");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_double(row[i]);
        }
        out += '\n';
    }
    return out;
}

Table parse(const std::string& text) {
    Table table;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("csv::parse: missing header");
    std::istringstream hdr(line);
    std::string cell;
    while (std::getline(hdr, cell, ',')) table.header.push_back(cell);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) {
            std::size_t used = 0;
            row.push_back(std::stod(cell, &used));
            if (used != cell.size()) throw std::invalid_argument("csv::parse: bad numeric cell");
        }
        if (row.size() != table.header.size())
            throw std::invalid_argument("csv::parse: row width mismatch");
        table.rows.push_back(std::move(row));
    }
    return table;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("csv: cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out.flush()) throw std::runtime_error("csv: write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("csv: cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace rsktraj::csv
