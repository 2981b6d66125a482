#pragma once

#include <vector>

namespace waveheat {

/// Displacement u and velocity v = u_t sampled at grid nodes; u[0] = 0.
struct WaveField {
  std::vector<double> u;
  std::vector<double> v;
};

/// Temperature samples at grid nodes.
struct HeatField {
  std::vector<double> p;
};

/// Full state (u, u_t, p) at one instant; wave and heat share one grid.
struct CoupledState {
  WaveField wave;
  HeatField heat;
  double t = 0.0;
};

/// One sampled row of a simulation: functional values and boundary traces.
struct EnergyRecord {
  double t = 0.0;
  double E = 0.0;
  double V1 = 0.0;
  double W2 = 0.0;
  double V2 = 0.0;
  double u1 = 0.0;   // u(1,t)
  double ut1 = 0.0;  // u_t(1,t)
  double p0 = 0.0;   // p(0,t)
  double p1 = 0.0;   // p(1,t)
};

}  // namespace waveheat
