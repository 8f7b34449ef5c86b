#include "output.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace rankbound::cli {

Format parse_format(const std::string& name) {
    if (name == "table") return Format::table;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    throw std::invalid_argument("unknown format: " + name);
}

std::string machine_number(double v) { return fmt::format("{:.12g}", v); }

std::string table_number(double v) { return fmt::format("{:.6g}", v); }

double rounded(double v) { return std::stod(machine_number(v)); }

void write_table(std::ostream& out, const Sheet& sheet) {
    std::vector<std::size_t> width(sheet.header.size(), 0);
    auto widen = [&width](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
    };
    widen(sheet.header);
    for (const auto& row : sheet.rows) widen(row);
    auto line = [&](const std::vector<std::string>& row) {
        std::string s;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) s += "  ";
            s += fmt::format("{:<{}}", row[i], i + 1 < row.size() ? width[i] : 0);
        }
        out << s << '\n';
    };
    line(sheet.header);
    for (const auto& row : sheet.rows) line(row);
}

void write_csv(std::ostream& out, const Sheet& sheet) {
    auto line = [&out](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i > 0 ? "," : "") << row[i];
        out << '\n';
    };
    if (!sheet.header.empty()) line(sheet.header);
    for (const auto& row : sheet.rows) line(row);
}

}  // namespace rankbound::cli
