#ifndef CUTOFFQED_CSV_HPP
#define CUTOFFQED_CSV_HPP

#include <cstdio>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace cutoffqed {

/// One CSV cell: text, integer, boolean, or a double rendered with 17
/// significant digits (parse-format-parse idempotent).
using CsvCell = std::variant<std::string, long long, bool, double>;

inline std::string format_cell(const CsvCell& cell) {
    struct Visitor {
        std::string operator()(const std::string& s) const { return s; }
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(bool b) const { return b ? "1" : "0"; }
        std::string operator()(double d) const {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", d);
            return buf;
        }
    };
    return std::visit(Visitor{}, cell);
}

/// Header line then comma-separated rows, '\n' endings, deterministic.
inline void emit_csv(std::ostream& os, const std::vector<std::string>& header,
                     const std::vector<std::vector<CsvCell>>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i)
        os << (i ? "," : "") << header[i];
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << format_cell(row[i]);
        os << '\n';
    }
}

}  // namespace cutoffqed

#endif
