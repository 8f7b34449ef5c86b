#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace rankbound::cli {

enum class Format { table, json, csv };

Format parse_format(const std::string& name);

// 12 significant digits for machine formats, 6 for the table view.
std::string machine_number(double v);
std::string table_number(double v);
double rounded(double v);

using Json = nlohmann::ordered_json;

// Rows of (label, cells) rendered as an aligned table or as CSV.
struct Sheet {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void write_table(std::ostream& out, const Sheet& sheet);
void write_csv(std::ostream& out, const Sheet& sheet);

}  // namespace rankbound::cli
