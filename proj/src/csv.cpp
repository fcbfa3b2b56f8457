#include "cvqkd/csv.hpp"

#include <cstdio>

#include "cvqkd/errors.hpp"

namespace cvqkd {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::generic: return "generic";
        case errc::domain: return "domain";
        case errc::empty_batch: return "empty_batch";
        case errc::config: return "config";
        case errc::identification: return "identification";
        case errc::degenerate_attack: return "degenerate_attack";
        case errc::infeasible: return "infeasible";
        case errc::degenerate_data: return "degenerate_data";
        case errc::unphysical_state: return "unphysical_state";
        case errc::no_positive_rate: return "no_positive_rate";
    }
    return "generic";
}

std::string format_value(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", v);
    return buffer;
}

std::string to_csv(const Table& table) {
    std::string out;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += table.header[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.header.size()) {
            throw domain_error("CSV row width does not match the header");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += format_value(row[i]);
        }
        out += '\n';
    }
    return out;
}

} // namespace cvqkd
