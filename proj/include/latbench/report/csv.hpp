#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace latbench::report {

/// Shortest text that parses back to the same double; "nan", "inf", "-inf" otherwise.
std::string format_number(double value);
std::string format_optional(const std::optional<double>& value);  // empty cell when absent

/// Parses a cell written by format_number; empty cells yield nullopt.
std::optional<double> parse_number(const std::string& cell);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a named column; throws ArgumentError when absent.
  std::size_t column(const std::string& name) const;
  std::vector<double> numeric_column(const std::string& name) const;
};

/// Comma separated, no quoting; lines starting with '#' are skipped.
CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::string& path);

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells);

}  // namespace latbench::report
