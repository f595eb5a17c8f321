#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace greybody {

inline constexpr const char* kToolVersion = "1.0.0";

//! Rectangular table with a '#'-prefixed comment header.  Cells are strings so
//! that reports can mix text and numbers; numeric cells are produced through
//! format_number, which prints 17 significant digits, so the CSV image of a
//! table built from the same inputs is byte-identical run to run.
struct Table {
    std::vector<std::string> comments; //!< header lines, without the '#'
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

//! %.17g; round-trips any double exactly (NaN prints as "nan").
std::string format_number(double x);

std::vector<std::string> format_row(const std::vector<double>& values);

//! CSV image: comments as "# ..." lines, then the column line, then the rows.
//! Cells containing commas, quotes, or newlines are double-quote escaped.
//! Throws ValidationError if a row width disagrees with the column count.
std::string to_csv(const Table& table);

void write_csv(const Table& table, std::ostream& os);

} // namespace greybody
