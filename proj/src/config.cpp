#include "ladderlab/config.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "ladderlab/errors.hpp"

namespace ladderlab {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double out = 0.0;
  try {
    out = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw BadConfig("bad numeric value for " + key + ": " + value);
  }
  if (pos != value.size())
    throw BadConfig("trailing garbage in value for " + key + ": " + value);
  return out;
}

long long parse_int(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  long long out = 0;
  try {
    out = std::stoll(value, &pos);
  } catch (const std::exception&) {
    throw BadConfig("bad integer value for " + key + ": " + value);
  }
  if (pos != value.size())
    throw BadConfig("trailing garbage in value for " + key + ": " + value);
  return out;
}

}  // namespace

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadConfig("cannot open config file: " + path);
  Config cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw BadConfig("line " + std::to_string(lineno) +
                      " is not key=value: " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "correction_order")
      cfg.correction_order = static_cast<int>(parse_int(key, value));
    else if (key == "min_height")
      cfg.min_height = parse_double(key, value);
    else if (key == "k0")
      cfg.k0 = static_cast<int>(parse_int(key, value));
    else if (key == "l0")
      cfg.l0 = parse_int(key, value);
    else if (key == "mvp_tol")
      cfg.mvp_tol = parse_double(key, value);
    else if (key == "cert_budget")
      cfg.cert_budget = parse_double(key, value);
    else if (key == "exact_budget")
      cfg.exact_budget = parse_double(key, value);
    else if (key == "secondary_budget")
      cfg.secondary_budget = parse_double(key, value);
    else if (key == "asym_margin")
      cfg.asym_margin = parse_double(key, value);
    else
      throw BadConfig("unknown config key: " + key);
  }
  validate(cfg);
  return cfg;
}

void validate(const Config& cfg) {
  if (cfg.correction_order < 0 || cfg.correction_order > 4)
    throw BadConfig("correction_order must lie in 0..4");
  if (!(cfg.min_height >= 10.0))
    throw BadConfig("min_height must be at least 10");
  if (cfg.k0 < 1 || cfg.k0 > 8) throw BadConfig("k0 must lie in 1..8");
  if (cfg.l0 < 1) throw BadConfig("l0 must be positive");
  if (!(cfg.mvp_tol > 0.0 && cfg.mvp_tol <= 1e-3))
    throw BadConfig("mvp_tol must lie in (0, 1e-3]");
  if (!(cfg.cert_budget > 0.0)) throw BadConfig("cert_budget must be positive");
  if (!(cfg.exact_budget > 0.0))
    throw BadConfig("exact_budget must be positive");
  if (!(cfg.secondary_budget > 0.0))
    throw BadConfig("secondary_budget must be positive");
  if (!(cfg.asym_margin > 0.0)) throw BadConfig("asym_margin must be positive");
}

}  // namespace ladderlab
