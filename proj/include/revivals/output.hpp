#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "revivals/carpet.hpp"

namespace revivals {

/// Numeric table with '#'-prefixed "key: value" metadata lines above the header.
struct CsvTable {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// %.17g: enough digits for an exact round trip of any double.
std::string format_double(double value);

void write_csv(std::ostream& out, const CsvTable& table);

/// Inverse of write_csv. Throws std::runtime_error on ragged or non-numeric rows.
CsvTable read_csv(std::istream& in);

/// Row-major grid: header "t,chi_t_over_pi,<x values>", one line per time row.
CsvTable carpet_table(const CarpetGrid& grid, double chi);

/// Binary PGM (P5), row 0 at the top. Bytes are lround(255 * d / max d) over the
/// whole grid, so dim rows stay dim.
void write_pgm(std::ostream& out, const CarpetGrid& grid);

}  // namespace revivals
