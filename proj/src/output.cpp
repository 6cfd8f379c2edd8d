#include "revivals/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace revivals {

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_csv(std::ostream& out, const CsvTable& table) {
  for (const auto& [key, value] : table.metadata) out << "# " << key << ": " << value << '\n';
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_double(row[c]);
    out << '\n';
  }
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto colon = line.find(": ");
      if (colon == std::string::npos) {
        table.metadata.emplace_back(line.substr(std::min<std::size_t>(2, line.size())), "");
      } else {
        table.metadata.emplace_back(line.substr(2, colon - 2), line.substr(colon + 2));
      }
      continue;
    }
    if (!header) {
      table.columns = split(line);
      header = true;
      continue;
    }
    const auto fields = split(line);
    if (fields.size() != table.columns.size()) throw std::runtime_error("read_csv: ragged row");
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) {
      std::size_t used = 0;
      const double v = std::stod(f, &used);
      if (used != f.size()) throw std::runtime_error("read_csv: bad number '" + f + "'");
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

CsvTable carpet_table(const CarpetGrid& grid, double chi) {
  CsvTable table;
  table.columns = {"t", "chi_t_over_pi"};
  for (int c = 0; c < grid.window.nx; ++c) table.columns.push_back(format_double(grid.x(c)));
  for (int r = 0; r < grid.window.nt; ++r) {
    std::vector<double> row = {grid.t(r), chi * grid.t(r) / std::numbers::pi};
    const auto values = grid.row(r);
    row.insert(row.end(), values.begin(), values.end());
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_pgm(std::ostream& out, const CarpetGrid& grid) {
  const double peak = grid.density.empty()
                          ? 0.0
                          : *std::max_element(grid.density.begin(), grid.density.end());
  out << "P5\n" << grid.window.nx << ' ' << grid.window.nt << "\n255\n";
  std::string bytes(grid.density.size(), '\0');
  for (std::size_t i = 0; i < grid.density.size(); ++i) {
    const long level = peak > 0.0 ? std::lround(255.0 * grid.density[i] / peak) : 0;
    bytes[i] = static_cast<char>(static_cast<unsigned char>(std::clamp(level, 0L, 255L)));
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace revivals
