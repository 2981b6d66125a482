#pragma once

#include "waveheat/params.hpp"
#include "waveheat/solvers.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace waveheat {

/// Parsed run configuration. [params] keys are required; [grid], [ic] and
/// [experiment] fall back to the defaults below. Unknown keys are rejected.
struct RunConfig {
  Parameters params;
  int nx = 100;
  double dt = 0.005;  // 0.5 / nx unless given explicitly
  double t_final = 10.0;
  int record_stride = 4;
  std::string u0 = "sine 1";
  std::string u1 = "zero";
  std::string p0 = "zero";
  std::vector<double> eps_list = {0.1, 0.05, 0.025, 0.0125};
  long trials = 1000;
  std::uint64_t seed = 12345;
  double burn_in = 0.2;
};

/// Line-based `key = value` format under [section] headers, # comments.
/// Throws ConfigError naming the key or line on any problem.
RunConfig parse_config(const std::string& path);

/// Preset grammar: zero | sine <k> | poly <c0> <c1> ... | gauss <center> <width> <amplitude>.
InitialConditionSpec parse_ic_preset(const std::string& text,
                                     InitialConditionSpec::Target target);

SimulationConfig simulation_config(const RunConfig& rc);
std::vector<InitialConditionSpec> ic_specs(const RunConfig& rc);

}  // namespace waveheat
