#pragma once

#include <string>
#include <vector>

namespace cvqkd {

// Numeric table with a header row. Serialized with '.' decimal separator,
// ',' delimiter and 12 significant digits, so output is byte-stable.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

std::string format_value(double v);
std::string to_csv(const Table& table);

} // namespace cvqkd
