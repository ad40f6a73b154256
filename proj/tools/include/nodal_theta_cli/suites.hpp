#pragma once

#include <string>
#include <vector>

#include "nodal_theta_cli/config.hpp"
#include "nodal_theta_cli/report.hpp"

namespace nodal_theta::cli {

struct SuiteResult {
  std::string name;
  bool passed = false;
  CsvTable table;
  /// Extra artifact (the SVG for zeroset-plot).
  std::string svg;
  std::vector<std::string> log;
};

SuiteResult run_identities(const RunConfig& cfg);
SuiteResult run_periods(const RunConfig& cfg);
SuiteResult run_thm51(const RunConfig& cfg);
SuiteResult run_thm66(const RunConfig& cfg);
SuiteResult run_zeroset_plot(const RunConfig& cfg);

/// Dispatch by command name; throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& command, const RunConfig& cfg);

/// Writes the suite's CSV (and SVG) into cfg.out_dir.
void write_outputs(const SuiteResult& result, const RunConfig& cfg);

}  // namespace nodal_theta::cli
