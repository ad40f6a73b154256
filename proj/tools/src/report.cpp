#include "nodal_theta_cli/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace nodal_theta::cli {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt(long x) { return std::to_string(x); }
std::string fmt(int x) { return std::to_string(x); }
std::string fmt(bool x) { return x ? "true" : "false"; }

void CsvTable::add(std::vector<std::string> row) {
  if (row.size() != header.size()) {
    throw std::logic_error("csv row width does not match the header");
  }
  rows.push_back(std::move(row));
}

std::string CsvTable::str() const {
  std::string out;
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

void CsvTable::write(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << str();
}

void push_complex(std::vector<std::string>& row, Complex z) {
  row.push_back(fmt(z.real()));
  row.push_back(fmt(z.imag()));
}

}  // namespace nodal_theta::cli
