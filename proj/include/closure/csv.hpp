#pragma once

#include <string>
#include <vector>

namespace closure {

// Shortest decimal representation that round-trips a 64-bit float.
std::string format_double(double value);

// RFC-4180-style rows: no quoting needed for our numeric/identifier payloads.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(const std::string& path);

}  // namespace closure
