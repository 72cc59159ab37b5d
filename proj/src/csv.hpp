#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace qdot {

// Shortest representation that round-trips a double ("%.12g" keeps outputs
// byte-stable across runs).
std::string fmt_num(double v);

// Minimal CSV emitter: UTF-8, header row, '.' decimal separator, '\n' rows.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header);

    void row(const std::vector<std::string>& cells);
    void row_nums(const std::vector<double>& values);

private:
    std::ofstream out_;
    std::size_t columns_;
};

}  // namespace qdot
