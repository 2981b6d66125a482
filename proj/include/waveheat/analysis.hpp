#pragma once

#include "waveheat/exec.hpp"
#include "waveheat/fields.hpp"
#include "waveheat/params.hpp"
#include "waveheat/solvers.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace waveheat {

/// Exponential decay rate fitted by least squares on (t, log value).
struct RateFit {
  double rate = 0.0;       // -slope
  double intercept = 0.0;  // log value at t = 0
  double r_squared = 1.0;
  double window_lo = 0.0;
  double window_hi = 0.0;
};

/// Fits the tail of a positive series; the first burn_in_fraction of the
/// span and samples below 1e-12 * value(0) are excluded. Throws FitError
/// with fewer than 10 usable samples.
RateFit fit_decay_rate(const std::vector<std::pair<double, double>>& series,
                       double burn_in_fraction);

std::vector<std::pair<double, double>> series_from_records(
    const std::vector<EnergyRecord>& records, double EnergyRecord::* column);

struct SpectralResult {
  double abscissa = 0.0;
  std::vector<std::complex<double>> eigenvalues;  // descending real part
};

/// Dense nonsymmetric eigendecomposition of the assembled generator;
/// dimension capped at 2000.
SpectralResult spectral_abscissa(const DiscreteGenerator& gen);

/// Eigenpair with the largest real part, for eigenmode-seeded experiments.
struct EigenPair {
  std::complex<double> value;
  std::vector<double> vec_re, vec_im;
};
EigenPair dominant_eigenpair(const DiscreteGenerator& gen);

/// 2 k(c)^2 with k the unique root of k tan k = c in (0, pi/2): the slowest
/// decay rate of ||p||^2 for the Robin-Neumann heat operator.
double robin_neumann_rate(double c);

struct SweepProfiles {
  std::vector<double> phi, psi, chi;  // unit L2 norm
};
SweepProfiles default_sweep_profiles(const SpatialGrid& g);

struct TikhonovPoint {
  double epsilon = 0.0;
  double e_u_max_weighted = 0.0;  // sup_t e^{mu t/8} (||u-ub||_H1 + ||ut-ubt||_L2)
  double e_p_max_weighted = 0.0;  // same weight on the p error
  std::vector<double> t_grid;
  std::vector<double> e_u, e_p;   // unweighted errors on t_grid
};

struct TikhonovSweepResult {
  std::vector<TikhonovPoint> points;
  double mu = 0.0;         // weight exponent used, e^{mu t/8}
  double slope_e_u = 0.0;  // log-log slope of the weighted sups vs epsilon
  double slope_e_p = 0.0;
  bool slopes_valid = false;
};

/// Runs (full, reduced, layer) per epsilon with exact-equality initial data
///   ub0 = eps^{3/2} phi, ub1 = eps^{3/2} psi, pb0 = eps chi,
///   u0 = ub0, u1 = ub1, p0 = pb0 + d (1+cx)/c u0(1),
/// and fits the log-log slopes of the weighted error sups.
/// Requires params passing check_theorem_1_4 and >= 3 strictly decreasing
/// epsilons.
TikhonovSweepResult tikhonov_sweep(const SimulationConfig& base,
                                   const std::vector<double>& eps_list,
                                   const SweepProfiles& profiles,
                                   Exec exec = Exec::parallel);

struct ObservabilityReport {
  double kappa_sup = 0.0;  // sup_t of q int_0^t e^{mu s/2} |ut(1,s)|^2 ds / ||ic||^2
  bool bounded = true;     // no growth trend over the last 20% of the horizon
  std::vector<double> t, kappa;
};

/// Requires q(a, mu) > 0 and the trace series of a reduced run.
ObservabilityReport observability_integral(const std::vector<EnergyRecord>& reduced_records,
                                           const Parameters& params, double ic_norm_sq);

struct TraceVerdict {
  double tau = 0.0;
  double trace_sq = 0.0;
  double bound = 0.0;
  bool confirmed = false;
};

/// Per-sample comparison of |p(0,tau)|^2 against c^{-1} e^{-pi^2 tau/4} ||p0||^2_H1.
std::vector<TraceVerdict> boundary_layer_trace_check(
    const std::vector<EnergyRecord>& layer_records, double c, double p0_h1_norm_sq);

enum class Verdict { CONFIRMED, VIOLATED, INCONCLUSIVE };

std::string to_string(Verdict v);

struct AuditEntry {
  std::string claim_id;
  double measured = 0.0;
  double bound = 0.0;
  Verdict verdict = Verdict::INCONCLUSIVE;
  std::string notes;
};

struct AuditReport {
  std::vector<AuditEntry> entries;
  bool any_violated() const;
};

/// Runs the standard simulations and compares measured decay rates and
/// energy-derivative samples against every stated bound. Violated bounds
/// are reported, never asserted. Requires params passing Theorem 1.1.
AuditReport claim_audit(const Parameters& params, const SimulationConfig& cfg,
                        const std::vector<InitialConditionSpec>& ics);

}  // namespace waveheat
