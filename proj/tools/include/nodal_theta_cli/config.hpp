#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "nodal_theta/curve.hpp"

namespace nodal_theta::cli {

/// Malformed or inconsistent configuration (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Tolerances {
  double series = 1e-14;
  int series_max_index = 64;
  double quad = 1e-10;
  double congruence = 1e-6;
  double newton = 1e-13;
  double identity = 1e-10;
  double period = 1e-8;
  double residual = 1e-6;
};

struct RunConfig {
  // curve.*
  Complex tau{0.0, 1.0};
  Complex p1{};
  Complex p2{};
  Complex z0{};
  Complex q0{};
  double delta = 0.05;
  std::vector<double> eps_candidates{0.05};
  // tol.*
  Tolerances tol;
  // run.*
  std::uint64_t seed = 1;
  int samples = 10;
  int grid = 6;
  int plot_resolution = 64;
  std::filesystem::path out_dir = ".";

  /// Curve instance with the given U2 radius.
  NodalCurveSpec curve(double eps) const;
};

/// Parses `key = value` lines; `#` starts a comment. Complex values are
/// written `re,im`; eps candidates are whitespace separated.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace nodal_theta::cli
