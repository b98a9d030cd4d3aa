#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bardina {

/// Flat key-value run configuration.  Every numeric field is range-checked by
/// validate(); parse errors and violations carry the offending key.
struct RunConfig {
  // domain / physics
  int dim = 3;
  int M = 8;
  double alpha = 1.0 / 64.0;
  double gamma = 1.0;
  // simulation
  double T = 1.0;
  double dt = 0.0;  // <= 0: heuristic default
  int sample_stride = 1;
  std::string initial = "random";   // random | kolmogorov | zero | path to a checkpoint
  std::string forcing = "kolmogorov";  // kolmogorov | random | zero | path
  double forcing_scale = 1.0;       // alpha-norm of a random forcing / initial state
  // Kolmogorov / stability
  int s = 8;
  double lambda = 0.0;  // <= 0: sqrt(2) c1 gamma (1+alpha s^2)^2/s
  double t_prime = 0.0; // <= 0: delta*s + 0.1 s (mid-rectangle)
  int r = 0;
  int a = 4, b = 1;
  // region / counting
  double delta = 0.5;
  double c1 = 6.2756;
  double c2 = 0.05, c3 = 0.5, c4 = 0.55;
  std::vector<int> s_list = {8, 16, 32, 64};
  // lattice sums
  double m_min = 0.01, m_max = 100.0;
  int m_points = 200;
  double tol = 1e-10;
  // fuzzing
  int trials = 500;
  long long pointwise_trials = 1000000;
  // misc
  uint64_t seed = 1;
  std::string out = "out";
  bool quick = false;

  /// Empty vector means valid; otherwise one message per violated key.
  std::vector<std::string> validate() const;

  /// Effective configuration as flat key = value text (re-parseable).
  std::string to_text() const;
};

/// Parses "key = value" lines ('#' comments allowed).  Unknown keys and
/// malformed values are reported as errors.  Numeric values accept a trailing
/// "pi" multiplier (e.g. "12pi").
RunConfig parse_config_text(const std::string& text, std::vector<std::string>& errors);
RunConfig parse_config_file(const std::string& path, std::vector<std::string>& errors);

/// Applies "key=value" override strings on top of a parsed config.
void apply_overrides(RunConfig& cfg, const std::vector<std::string>& overrides,
                     std::vector<std::string>& errors);

double parse_number(const std::string& text);  // handles the "pi" suffix

}  // namespace bardina
