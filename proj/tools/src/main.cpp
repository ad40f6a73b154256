#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "nodal_theta/errors.hpp"
#include "nodal_theta_cli/config.hpp"
#include "nodal_theta_cli/suites.hpp"

int main(int argc, char** argv) {
  using namespace nodal_theta::cli;

  CLI::App app{"Generalized theta functions on a nodal curve: verification suites"};
  std::string command;
  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  app.add_option("command", command, "Suite to run")
      ->required()
      ->check(CLI::IsMember({"identities", "periods", "thm51", "thm66", "zeroset-plot"}));
  app.add_option("--config", config_path, "Configuration file")->required();
  app.add_option("--out", out_dir, "Output directory (overrides run.out)");
  app.add_option("--seed", seed, "RNG seed (overrides run.seed)");
  app.add_option("--samples", samples, "Sample count (overrides run.samples)")
      ->check(CLI::Range(1, 100000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  RunConfig cfg;
  try {
    cfg = load_config(config_path);
  } catch (const ConfigError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  if (out_dir) cfg.out_dir = *out_dir;
  if (seed) cfg.seed = *seed;
  if (samples) cfg.samples = *samples;

  try {
    const SuiteResult result = run_suite(command, cfg);
    write_outputs(result, cfg);
    for (const auto& line : result.log) std::cout << result.name << ": " << line << '\n';
    std::cout << result.name << ": " << (result.passed ? "PASS" : "FAIL") << " ("
              << (cfg.out_dir / (result.name + ".csv")).string() << ")\n";
    return result.passed ? 0 : 1;
  } catch (const ConfigError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << command << ": error: " << e.what() << '\n';
    return 1;
  }
}
