#include "greybody/table.hpp"

#include <cstdio>
#include <ostream>
#include <string>

#include "greybody/errors.hpp"

namespace greybody {

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<std::string> format_row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(format_number(v));
    return cells;
}

namespace {

bool needs_quoting(const std::string& cell) {
    return cell.find_first_of(",\"\n") != std::string::npos;
}

void append_cell(std::string& out, const std::string& cell) {
    if (!needs_quoting(cell)) {
        out += cell;
        return;
    }
    out += '"';
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
}

} // namespace

std::string to_csv(const Table& table) {
    std::string out;
    for (const std::string& line : table.comments) {
        out += "# ";
        out += line;
        out += '\n';
    }
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        append_cell(out, table.columns[i]);
    }
    out += '\n';
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        if (row.size() != table.columns.size())
            throw ValidationError("table row " + std::to_string(r) + " has " +
                                  std::to_string(row.size()) + " cells, expected " +
                                  std::to_string(table.columns.size()));
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            append_cell(out, row[i]);
        }
        out += '\n';
    }
    return out;
}

void write_csv(const Table& table, std::ostream& os) { os << to_csv(table); }

} // namespace greybody
