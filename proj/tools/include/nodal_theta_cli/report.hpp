#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "nodal_theta/complex_pair.hpp"

namespace nodal_theta::cli {

/// 17 significant digits, '.' decimal separator.
std::string fmt(double x);
std::string fmt(long x);
std::string fmt(int x);
std::string fmt(bool x);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row);
  std::string str() const;
  void write(const std::filesystem::path& path) const;
};

/// Appends re and im columns.
void push_complex(std::vector<std::string>& row, Complex z);

}  // namespace nodal_theta::cli
