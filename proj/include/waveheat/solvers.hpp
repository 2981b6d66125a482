#pragma once

#include "waveheat/fields.hpp"
#include "waveheat/grid.hpp"
#include "waveheat/linalg.hpp"
#include "waveheat/params.hpp"

#include <string>
#include <vector>

namespace waveheat {

/// Initial-condition preset; sine is sin(k pi x / 2) so u-targets satisfy
/// the compatibility condition u(0) = 0 by construction.
struct InitialConditionSpec {
  enum class Kind { zero, sine, poly, gauss };
  enum class Target { u0, u1, p0 };

  Kind kind = Kind::zero;
  Target target = Target::u0;
  int wavenumber = 1;                // sine
  std::vector<double> coefficients;  // poly: c0 + c1 x + c2 x^2 + ...
  double center = 0.5;               // gauss
  double width = 0.1;
  double amplitude = 1.0;

  std::vector<double> sample(const SpatialGrid& g) const;
};

struct SimulationConfig {
  Parameters params;
  SpatialGrid grid{100};
  double dt = 0.005;
  double t_final = 10.0;
  int record_stride = 4;
  /// Sorted instants at which full field snapshots are requested.
  std::vector<double> snapshot_times;

  void validate() const;
};

/// Semi-discrete generator A_h of the coupled system, boundary conditions
/// folded in via ghost nodes. Unknown ordering: u_1..u_nx, v_1..v_nx,
/// p_0..p_nx (the Dirichlet nodes u_0 = v_0 = 0 are eliminated).
struct DiscreteGenerator {
  DenseMatrix matrix;
  int nx = 0;
  std::string ordering;

  int dim() const { return 3 * nx + 1; }
  int iu(int j) const { return j - 1; }       // j in 1..nx
  int iv(int j) const { return nx + j - 1; }  // j in 1..nx
  int ip(int j) const { return 2 * nx + j; }  // j in 0..nx
};

std::vector<double> pack_state(const CoupledState& s, const DiscreteGenerator& gen);
CoupledState unpack_state(const std::vector<double>& y, const DiscreteGenerator& gen, double t);

struct CoupledRun {
  std::vector<EnergyRecord> records;
  CoupledState final_state;
  std::vector<CoupledState> snapshots;  // at the step nearest each request
};

struct ReducedRun {
  std::vector<EnergyRecord> records;  // heat columns zero
  WaveField final_wave;
  std::vector<WaveField> snapshots;
  std::vector<double> snapshot_times;
};

struct LayerRun {
  std::vector<EnergyRecord> records;  // t column holds tau
  HeatField final_field;
  double stop_time = 0.0;             // early-stop tau, or the horizon
  std::vector<HeatField> snapshots;   // interpolated in tau; zero past stop_time
  std::vector<double> snapshot_times;
};

/// Samples the presets; u0 is shifted so u0(0) = 0 exactly, recording a
/// warning when the shift exceeds 1e-12. Exactly one spec per target.
CoupledState make_initial_state(const std::vector<InitialConditionSpec>& specs,
                                const SpatialGrid& g,
                                std::vector<std::string>* warnings = nullptr);

DiscreteGenerator assemble_discrete_generator(const Parameters& params, const SpatialGrid& g);

/// Wave block with the reduced Robin condition u_x(1) = -a u_t(1) + (bd/c) u(1).
/// Ordering: u_1..u_nx, v_1..v_nx.
DenseMatrix assemble_reduced_generator(const Parameters& params, const SpatialGrid& g);

/// Heat operator in the stretched time tau: Robin at x=0, zero flux at x=1.
Tridiagonal assemble_layer_generator(double c, const SpatialGrid& g);

/// Monolithic Crank-Nicolson integration of the coupled system.
CoupledRun simulate_coupled(const SimulationConfig& cfg, const CoupledState& ic);

/// Wave block alone under the reduced boundary condition; requires c != 0.
ReducedRun simulate_reduced(const SimulationConfig& cfg, const std::vector<double>& u0,
                            const std::vector<double>& u1);

/// Heat transient in tau; cfg.dt and cfg.t_final are read in tau units.
/// Stops early once V2 < 1e-16 * V2(0). Requires c > 0.
LayerRun simulate_boundary_layer(const SimulationConfig& cfg, const std::vector<double>& p0);

/// Solves A_h (u, v, p) = rhs: v is read off directly, then the coupled
/// pair of tridiagonal two-point problems for (u, p) is closed through the
/// two scalar couplings p(0) and u(1).
CoupledState solve_resolvent(const Parameters& params, const CoupledState& rhs,
                             const SpatialGrid& g);

/// One-sided-stencil boundary condition residuals of a state.
struct BoundaryResiduals {
  double wave_robin = 0.0;  // u_x(1) + a u_t(1) - b p(0)
  double heat_robin = 0.0;  // p_x(0) - c p(0)
  double heat_flux = 0.0;   // p_x(1) - d u(1)
};
BoundaryResiduals boundary_residuals(const CoupledState& s, const Parameters& params,
                                     const SpatialGrid& g);

}  // namespace waveheat
