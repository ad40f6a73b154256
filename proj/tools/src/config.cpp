#include "nodal_theta_cli/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace nodal_theta::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError("config: '" + key + "' expects a number, got '" + text + "'");
  }
  return v;
}

long long parse_int(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError("config: '" + key + "' expects an integer, got '" + text + "'");
  }
  return v;
}

Complex parse_complex(const std::string& key, const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw ConfigError("config: '" + key + "' expects 're,im', got '" + text + "'");
  }
  return {parse_double(key, text.substr(0, comma)),
          parse_double(key, text.substr(comma + 1))};
}

double positive(const std::string& key, double v) {
  if (!(v > 0.0)) throw ConfigError("config: '" + key + "' must be positive");
  return v;
}

}  // namespace

NodalCurveSpec RunConfig::curve(double eps) const {
  NodalCurveSpec::Params p;
  p.tau = tau;
  p.p1 = p1;
  p.p2 = p2;
  p.z0 = z0;
  p.q0 = q0;
  p.delta = delta;
  p.eps = eps;
  p.policy = {tol.series, tol.series_max_index};
  p.quad_tol = tol.quad;
  try {
    return NodalCurveSpec::create(p);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: invalid curve: ") + e.what());
  }
}

RunConfig parse_config(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config: line " + std::to_string(lineno) + " has no '='");
    }
    const std::string key = trim(line.substr(0, eq));
    if (kv.count(key)) throw ConfigError("config: duplicate key '" + key + "'");
    kv[key] = trim(line.substr(eq + 1));
  }

  RunConfig cfg;
  std::set<std::string> seen;
  const auto take = [&](const std::string& key) -> const std::string* {
    auto it = kv.find(key);
    if (it == kv.end()) return nullptr;
    seen.insert(key);
    return &it->second;
  };
  const auto require = [&](const std::string& key) -> const std::string& {
    const std::string* v = take(key);
    if (!v) throw ConfigError("config: missing required key '" + key + "'");
    return *v;
  };

  cfg.tau = parse_complex("curve.tau", require("curve.tau"));
  if (!(cfg.tau.imag() > 0.0)) throw ConfigError("config: curve.tau needs Im > 0");
  cfg.p1 = parse_complex("curve.p1", require("curve.p1"));
  cfg.p2 = parse_complex("curve.p2", require("curve.p2"));
  cfg.z0 = parse_complex("curve.z0", require("curve.z0"));
  if (auto v = take("curve.q0")) cfg.q0 = parse_complex("curve.q0", *v);
  if (auto v = take("curve.delta")) cfg.delta = positive("curve.delta", parse_double("curve.delta", *v));
  if (auto v = take("curve.eps")) {
    cfg.eps_candidates.clear();
    std::istringstream items(*v);
    std::string item;
    while (items >> item) {
      cfg.eps_candidates.push_back(positive("curve.eps", parse_double("curve.eps", item)));
    }
    if (cfg.eps_candidates.empty()) throw ConfigError("config: curve.eps is empty");
  }

  const auto tol = [&](const char* key, double& slot) {
    if (auto v = take(key)) slot = positive(key, parse_double(key, *v));
  };
  tol("tol.series", cfg.tol.series);
  tol("tol.quad", cfg.tol.quad);
  tol("tol.congruence", cfg.tol.congruence);
  tol("tol.newton", cfg.tol.newton);
  tol("tol.identity", cfg.tol.identity);
  tol("tol.period", cfg.tol.period);
  tol("tol.residual", cfg.tol.residual);
  if (!(cfg.tol.series < 1.0)) throw ConfigError("config: tol.series must be < 1");
  if (auto v = take("tol.series_max_index")) {
    cfg.tol.series_max_index = static_cast<int>(parse_int("tol.series_max_index", *v));
    if (cfg.tol.series_max_index < 1) {
      throw ConfigError("config: tol.series_max_index must be >= 1");
    }
  }

  if (auto v = take("run.seed")) {
    const long long s = parse_int("run.seed", *v);
    if (s < 0) throw ConfigError("config: run.seed must be non-negative");
    cfg.seed = static_cast<std::uint64_t>(s);
  }
  const auto count = [&](const char* key, int& slot, int lo) {
    if (auto v = take(key)) {
      const long long n = parse_int(key, *v);
      if (n < lo || n > 100000) throw ConfigError(std::string("config: '") + key + "' out of range");
      slot = static_cast<int>(n);
    }
  };
  count("run.samples", cfg.samples, 1);
  count("run.grid", cfg.grid, 2);
  count("run.plot_resolution", cfg.plot_resolution, 4);
  if (auto v = take("run.out")) cfg.out_dir = *v;

  for (const auto& [key, value] : kv) {
    if (!seen.count(key)) throw ConfigError("config: unknown key '" + key + "'");
  }
  for (double eps : cfg.eps_candidates) cfg.curve(eps);
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace nodal_theta::cli
