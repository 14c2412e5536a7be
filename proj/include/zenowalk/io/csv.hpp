#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zenowalk::io {

/// Numeric table. A NaN cell is written as an empty field and read back as NaN.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// 17 significant digits, enough to round-trip any double.
std::string format_number(double value);

/// Header line then one line per row, comma separated, LF endings.
void write_csv(std::ostream& os, const Table& table);

/// Throws zenowalk::InvalidParameter on a malformed cell or ragged row.
Table read_csv(std::istream& is);

/// Exact equality with NaN == NaN.
bool identical(const Table& a, const Table& b);

}  // namespace zenowalk::io
