#pragma once

#include <string>

namespace ladderlab {

// Runtime knobs shared by the command-line tool. Flat key=value text file,
// '#' starts a comment, unknown keys rejected.
struct Config {
  int correction_order = 2;
  double min_height = 50.0;
  int k0 = 3;           // largest iteration order accepted
  long long l0 = 64;    // smallest segment index accepted
  double mvp_tol = 1e-9;
  double cert_budget = 1e-7;
  double exact_budget = 1e-6;
  double secondary_budget = 1e-5;
  double asym_margin = 5.0;
};

Config load_config(const std::string& path);
void validate(const Config& cfg);

}  // namespace ladderlab
