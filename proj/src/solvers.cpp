#include "waveheat/solvers.hpp"

#include "waveheat/errors.hpp"
#include "waveheat/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace waveheat {

namespace {

constexpr double kPi = std::numbers::pi;

bool all_finite(const std::vector<double>& y) {
  for (double v : y)
    if (!std::isfinite(v)) return false;
  return true;
}

/// Crank-Nicolson with the system matrix (I - dt/2 A) factorized once.
/// The first two nominal steps are taken as four backward-Euler half-steps
/// (Rannacher startup): incompatible initial data excites sawtooth modes
/// that trapezoidal stepping barely damps, and the L-stable half-steps
/// remove them without extra factorizations, since the half-step matrix is
/// exactly the Crank-Nicolson left side.
class DenseCrankNicolson {
 public:
  DenseCrankNicolson(const DenseMatrix& A, double dt)
      : plus_(A.rows(), A.cols()), lu_(build_minus(A, dt)), work_(A.rows()) {
    const int n = A.rows();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        plus_(i, j) = (i == j ? 1.0 : 0.0) + 0.5 * dt * A(i, j);
  }

  void step(std::vector<double>& y) {
    if (startup_ > 0) {
      --startup_;
      lu_.solve_in_place(y);
      lu_.solve_in_place(y);
      return;
    }
    const int n = plus_.rows();
    for (int i = 0; i < n; ++i) {
      const double* row = plus_.data() + static_cast<long>(i) * n;
      double acc = 0.0;
      for (int j = 0; j < n; ++j) acc += row[j] * y[j];
      work_[i] = acc;
    }
    y.swap(work_);
    lu_.solve_in_place(y);
  }

 private:
  static DenseMatrix build_minus(const DenseMatrix& A, double dt) {
    DenseMatrix m(A.rows(), A.cols());
    for (int i = 0; i < A.rows(); ++i)
      for (int j = 0; j < A.cols(); ++j)
        m(i, j) = (i == j ? 1.0 : 0.0) - 0.5 * dt * A(i, j);
    return m;
  }

  DenseMatrix plus_;
  LuFactorization lu_;
  std::vector<double> work_;
  int startup_ = 2;
};

EnergyRecord record_coupled(const CoupledState& s, const Parameters& P, const SpatialGrid& g) {
  EnergyRecord r;
  r.t = s.t;
  r.E = total_energy(s, P, g);
  r.V1 = v1(s.wave, P.mu, g);
  r.W2 = w2(s.heat, g);
  r.V2 = P.c > 0.0 ? v2(s.heat, P.c, g) : 0.0;
  r.u1 = s.wave.u.back();
  r.ut1 = s.wave.v.back();
  r.p0 = s.heat.p.front();
  r.p1 = s.heat.p.back();
  return r;
}

/// Step indices nearest to the requested times.
std::vector<long> snap_steps(const std::vector<double>& times, double dt, long n_steps) {
  std::vector<long> steps(times.size());
  for (size_t i = 0; i < times.size(); ++i)
    steps[i] = std::clamp(std::lround(times[i] / dt), 0L, n_steps);
  return steps;
}

}  // namespace

void SimulationConfig::validate() const {
  params.validate();
  if (!(dt > 0.0)) throw std::invalid_argument("SimulationConfig: dt must be > 0");
  if (!(t_final > 0.0)) throw std::invalid_argument("SimulationConfig: t_final must be > 0");
  if (record_stride < 1)
    throw std::invalid_argument("SimulationConfig: record_stride must be >= 1");
  if (!std::is_sorted(snapshot_times.begin(), snapshot_times.end()))
    throw std::invalid_argument("SimulationConfig: snapshot_times must be sorted");
  for (double t : snapshot_times)
    if (t < 0.0 || t > t_final + dt)
      throw std::invalid_argument("SimulationConfig: snapshot time outside [0, t_final]");
}

std::vector<double> InitialConditionSpec::sample(const SpatialGrid& g) const {
  std::vector<double> f(g.num_nodes(), 0.0);
  switch (kind) {
    case Kind::zero:
      break;
    case Kind::sine:
      for (int j = 0; j < g.num_nodes(); ++j)
        f[j] = std::sin(0.5 * wavenumber * kPi * g.node(j));
      break;
    case Kind::poly:
      for (int j = 0; j < g.num_nodes(); ++j) {
        double acc = 0.0;
        for (size_t k = coefficients.size(); k-- > 0;) acc = acc * g.node(j) + coefficients[k];
        f[j] = acc;
      }
      break;
    case Kind::gauss:
      for (int j = 0; j < g.num_nodes(); ++j) {
        const double z = (g.node(j) - center) / width;
        f[j] = amplitude * std::exp(-z * z);
      }
      break;
  }
  return f;
}

CoupledState make_initial_state(const std::vector<InitialConditionSpec>& specs,
                                const SpatialGrid& g, std::vector<std::string>* warnings) {
  const InitialConditionSpec* by_target[3] = {nullptr, nullptr, nullptr};
  for (const auto& s : specs) {
    auto& slot = by_target[static_cast<int>(s.target)];
    if (slot) throw std::invalid_argument("make_initial_state: duplicate target spec");
    slot = &s;
  }
  for (int i = 0; i < 3; ++i)
    if (!by_target[i]) throw std::invalid_argument("make_initial_state: missing target spec");

  CoupledState state;
  state.t = 0.0;
  state.wave.u = by_target[0]->sample(g);
  state.wave.v = by_target[1]->sample(g);
  state.heat.p = by_target[2]->sample(g);

  const double shift = state.wave.u[0];
  if (shift != 0.0) {
    for (double& x : state.wave.u) x -= shift;
    if (std::abs(shift) > 1e-12 && warnings)
      warnings->push_back("u0 shifted by " + std::to_string(-shift) +
                          " to satisfy the compatibility condition u0(0) = 0");
  }
  state.wave.u[0] = 0.0;
  return state;
}

DiscreteGenerator assemble_discrete_generator(const Parameters& P, const SpatialGrid& g) {
  P.validate();
  DiscreteGenerator gen;
  gen.nx = g.nx();
  gen.ordering =
      "u_1..u_nx (interior+right), v_1..v_nx, p_0..p_nx; Dirichlet nodes eliminated";
  const int n = g.nx();
  const double h = g.h();
  const double ih2 = 1.0 / (h * h);
  const double ie = 1.0 / P.epsilon;
  gen.matrix = DenseMatrix(gen.dim(), gen.dim());
  DenseMatrix& M = gen.matrix;

  // du_j/dt = v_j
  for (int j = 1; j <= n; ++j) M(gen.iu(j), gen.iv(j)) = 1.0;

  // dv_j/dt = u_xx, ghost at x=1 from u_x(1) = -a v(1) + b p(0)
  for (int j = 1; j < n; ++j) {
    if (j > 1) M(gen.iv(j), gen.iu(j - 1)) = ih2;
    M(gen.iv(j), gen.iu(j)) = -2.0 * ih2;
    M(gen.iv(j), gen.iu(j + 1)) = ih2;
  }
  M(gen.iv(n), gen.iu(n - 1)) = 2.0 * ih2;
  M(gen.iv(n), gen.iu(n)) = -2.0 * ih2;
  M(gen.iv(n), gen.iv(n)) = -2.0 * P.a / h;
  M(gen.iv(n), gen.ip(0)) = 2.0 * P.b / h;

  // dp_j/dt = eps^-1 p_xx, ghosts from p_x(0) = c p(0) and p_x(1) = d u(1)
  M(gen.ip(0), gen.ip(0)) = ie * (-2.0 - 2.0 * h * P.c) * ih2;
  M(gen.ip(0), gen.ip(1)) = ie * 2.0 * ih2;
  for (int j = 1; j < n; ++j) {
    M(gen.ip(j), gen.ip(j - 1)) = ie * ih2;
    M(gen.ip(j), gen.ip(j)) = -2.0 * ie * ih2;
    M(gen.ip(j), gen.ip(j + 1)) = ie * ih2;
  }
  M(gen.ip(n), gen.ip(n - 1)) = 2.0 * ie * ih2;
  M(gen.ip(n), gen.ip(n)) = -2.0 * ie * ih2;
  M(gen.ip(n), gen.iu(n)) = ie * 2.0 * P.d / h;

  return gen;
}

DenseMatrix assemble_reduced_generator(const Parameters& P, const SpatialGrid& g) {
  if (P.c == 0.0) throw std::invalid_argument("assemble_reduced_generator: c must be nonzero");
  const int n = g.nx();
  const double h = g.h();
  const double ih2 = 1.0 / (h * h);
  const double bdc = P.b * P.d / P.c;
  DenseMatrix M(2 * n, 2 * n);
  auto iu = [&](int j) { return j - 1; };
  auto iv = [&](int j) { return n + j - 1; };

  for (int j = 1; j <= n; ++j) M(iu(j), iv(j)) = 1.0;
  for (int j = 1; j < n; ++j) {
    if (j > 1) M(iv(j), iu(j - 1)) = ih2;
    M(iv(j), iu(j)) = -2.0 * ih2;
    M(iv(j), iu(j + 1)) = ih2;
  }
  // ghost at x=1 from u_x(1) = -a v(1) + (bd/c) u(1)
  M(iv(n), iu(n - 1)) = 2.0 * ih2;
  M(iv(n), iu(n)) = -2.0 * ih2 + 2.0 * bdc / h;
  M(iv(n), iv(n)) = -2.0 * P.a / h;
  return M;
}

Tridiagonal assemble_layer_generator(double c, const SpatialGrid& g) {
  if (!(c > 0.0)) throw std::invalid_argument("assemble_layer_generator: c must be > 0");
  const int n = g.nx();
  const double h = g.h();
  const double ih2 = 1.0 / (h * h);
  Tridiagonal T;
  T.lower.assign(n, 0.0);
  T.diag.assign(n + 1, 0.0);
  T.upper.assign(n, 0.0);
  T.diag[0] = (-2.0 - 2.0 * h * c) * ih2;
  T.upper[0] = 2.0 * ih2;
  for (int j = 1; j < n; ++j) {
    T.lower[j - 1] = ih2;
    T.diag[j] = -2.0 * ih2;
    T.upper[j] = ih2;
  }
  T.lower[n - 1] = 2.0 * ih2;
  T.diag[n] = -2.0 * ih2;
  return T;
}

std::vector<double> pack_state(const CoupledState& s, const DiscreteGenerator& gen) {
  const int n = gen.nx;
  std::vector<double> y(gen.dim());
  for (int j = 1; j <= n; ++j) {
    y[gen.iu(j)] = s.wave.u[j];
    y[gen.iv(j)] = s.wave.v[j];
  }
  for (int j = 0; j <= n; ++j) y[gen.ip(j)] = s.heat.p[j];
  return y;
}

CoupledState unpack_state(const std::vector<double>& y, const DiscreteGenerator& gen,
                          double t) {
  const int n = gen.nx;
  CoupledState s;
  s.t = t;
  s.wave.u.assign(n + 1, 0.0);
  s.wave.v.assign(n + 1, 0.0);
  s.heat.p.assign(n + 1, 0.0);
  for (int j = 1; j <= n; ++j) {
    s.wave.u[j] = y[gen.iu(j)];
    s.wave.v[j] = y[gen.iv(j)];
  }
  for (int j = 0; j <= n; ++j) s.heat.p[j] = y[gen.ip(j)];
  return s;
}

CoupledRun simulate_coupled(const SimulationConfig& cfg, const CoupledState& ic) {
  cfg.validate();
  const SpatialGrid& g = cfg.grid;
  const DiscreteGenerator gen = assemble_discrete_generator(cfg.params, g);
  DenseCrankNicolson cn(gen.matrix, cfg.dt);

  const long n_steps = std::max(1L, std::lround(cfg.t_final / cfg.dt));
  const auto snaps = snap_steps(cfg.snapshot_times, cfg.dt, n_steps);

  CoupledRun run;
  std::vector<double> y = pack_state(ic, gen);
  size_t snap_ptr = 0;

  auto visit = [&](long k) {
    const double t = k * cfg.dt;
    const bool rec = (k % cfg.record_stride == 0) || k == n_steps;
    const bool want_snap = snap_ptr < snaps.size() && snaps[snap_ptr] == k;
    if (!(rec || want_snap || k == n_steps)) return;
    if (!all_finite(y))
      throw NumericalError("simulate_coupled: non-finite field values at step " +
                           std::to_string(k));
    CoupledState s = unpack_state(y, gen, t);
    if (rec) run.records.push_back(record_coupled(s, cfg.params, g));
    while (snap_ptr < snaps.size() && snaps[snap_ptr] == k) {
      run.snapshots.push_back(s);
      ++snap_ptr;
    }
    if (k == n_steps) run.final_state = std::move(s);
  };

  visit(0);
  for (long k = 1; k <= n_steps; ++k) {
    cn.step(y);
    visit(k);
  }
  return run;
}

ReducedRun simulate_reduced(const SimulationConfig& cfg, const std::vector<double>& u0,
                            const std::vector<double>& u1) {
  cfg.validate();
  if (cfg.params.c == 0.0) throw std::invalid_argument("simulate_reduced: c must be nonzero");
  const SpatialGrid& g = cfg.grid;
  const int n = g.nx();
  if (static_cast<int>(u0.size()) != n + 1 || static_cast<int>(u1.size()) != n + 1)
    throw std::invalid_argument("simulate_reduced: initial data does not match grid");

  const DenseMatrix A = assemble_reduced_generator(cfg.params, g);
  DenseCrankNicolson cn(A, cfg.dt);

  const long n_steps = std::max(1L, std::lround(cfg.t_final / cfg.dt));
  const auto snaps = snap_steps(cfg.snapshot_times, cfg.dt, n_steps);

  std::vector<double> y(2 * n);
  for (int j = 1; j <= n; ++j) {
    y[j - 1] = u0[j] - u0[0];  // enforce u(0) = 0
    y[n + j - 1] = u1[j];
  }

  ReducedRun run;
  size_t snap_ptr = 0;

  auto to_field = [&](const std::vector<double>& z) {
    WaveField w;
    w.u.assign(n + 1, 0.0);
    w.v.assign(n + 1, 0.0);
    for (int j = 1; j <= n; ++j) {
      w.u[j] = z[j - 1];
      w.v[j] = z[n + j - 1];
    }
    return w;
  };

  auto visit = [&](long k) {
    const double t = k * cfg.dt;
    const bool rec = (k % cfg.record_stride == 0) || k == n_steps;
    const bool want_snap = snap_ptr < snaps.size() && snaps[snap_ptr] == k;
    if (!(rec || want_snap || k == n_steps)) return;
    if (!all_finite(y))
      throw NumericalError("simulate_reduced: non-finite field values at step " +
                           std::to_string(k));
    WaveField w = to_field(y);
    if (rec) {
      EnergyRecord r;
      r.t = t;
      r.E = 0.5 * h_inner_product_wave(w, w, cfg.params.mu, g);
      r.V1 = v1(w, cfg.params.mu, g);
      r.u1 = w.u[n];
      r.ut1 = w.v[n];
      run.records.push_back(r);
    }
    while (snap_ptr < snaps.size() && snaps[snap_ptr] == k) {
      run.snapshots.push_back(w);
      run.snapshot_times.push_back(t);
      ++snap_ptr;
    }
    if (k == n_steps) run.final_wave = std::move(w);
  };

  visit(0);
  for (long k = 1; k <= n_steps; ++k) {
    cn.step(y);
    visit(k);
  }
  return run;
}

LayerRun simulate_boundary_layer(const SimulationConfig& cfg, const std::vector<double>& p0) {
  cfg.validate();
  if (!(cfg.params.c > 0.0))
    throw std::invalid_argument("simulate_boundary_layer: c must be > 0");
  const SpatialGrid& g = cfg.grid;
  const int n = g.nx();
  if (static_cast<int>(p0.size()) != n + 1)
    throw std::invalid_argument("simulate_boundary_layer: initial data does not match grid");

  const Tridiagonal T = assemble_layer_generator(cfg.params.c, g);
  const double dt = cfg.dt;

  // (I - dt/2 T) p_new = (I + dt/2 T) p_old
  Tridiagonal minus;
  minus.lower.resize(n);
  minus.diag.resize(n + 1);
  minus.upper.resize(n);
  for (int i = 0; i < n; ++i) {
    minus.lower[i] = -0.5 * dt * T.lower[i];
    minus.upper[i] = -0.5 * dt * T.upper[i];
  }
  for (int i = 0; i <= n; ++i) minus.diag[i] = 1.0 - 0.5 * dt * T.diag[i];

  auto apply_plus = [&](const std::vector<double>& p) {
    std::vector<double> r(n + 1);
    for (int i = 0; i <= n; ++i) {
      double acc = (1.0 + 0.5 * dt * T.diag[i]) * p[i];
      if (i > 0) acc += 0.5 * dt * T.lower[i - 1] * p[i - 1];
      if (i < n) acc += 0.5 * dt * T.upper[i] * p[i + 1];
      r[i] = acc;
    }
    return r;
  };

  const long n_steps = std::max(1L, std::lround(cfg.t_final / dt));

  LayerRun run;
  std::vector<double> p = p0;
  std::vector<double> p_prev = p0;
  const double v2_0 = v2(HeatField{p0}, cfg.params.c, g);
  size_t snap_ptr = 0;
  run.stop_time = cfg.t_final;
  bool stopped = false;
  long k = 0;

  auto take_snapshots_up_to = [&](double t_lo, double t_hi) {
    // linear interpolation between consecutive steps
    while (snap_ptr < cfg.snapshot_times.size() && cfg.snapshot_times[snap_ptr] <= t_hi) {
      const double tau = cfg.snapshot_times[snap_ptr];
      const double w = (t_hi > t_lo) ? std::clamp((tau - t_lo) / (t_hi - t_lo), 0.0, 1.0) : 1.0;
      HeatField f;
      f.p.resize(n + 1);
      for (int j = 0; j <= n; ++j) f.p[j] = (1.0 - w) * p_prev[j] + w * p[j];
      run.snapshots.push_back(std::move(f));
      run.snapshot_times.push_back(tau);
      ++snap_ptr;
    }
  };

  auto record_at = [&](double t) {
    if (!all_finite(p))
      throw NumericalError("simulate_boundary_layer: non-finite field values at step " +
                           std::to_string(k));
    HeatField f{p};
    EnergyRecord r;
    r.t = t;
    r.W2 = w2(f, g);
    r.V2 = v2(f, cfg.params.c, g);
    r.E = r.W2;
    r.p0 = p.front();
    r.p1 = p.back();
    run.records.push_back(r);
    return r.V2;
  };

  record_at(0.0);
  take_snapshots_up_to(0.0, 0.0);
  for (k = 1; k <= n_steps; ++k) {
    p_prev = p;
    p = minus.solve(apply_plus(p));
    const double t = k * dt;
    take_snapshots_up_to(t - dt, t);
    if (k % cfg.record_stride == 0 || k == n_steps) {
      const double v2_now = record_at(t);
      if (v2_now < 1e-16 * v2_0) {
        run.stop_time = t;
        stopped = true;
        break;
      }
    }
  }
  if (!stopped) run.stop_time = n_steps * dt;

  // past the stop the transient is treated as identically zero
  while (snap_ptr < cfg.snapshot_times.size()) {
    run.snapshots.push_back(HeatField{std::vector<double>(n + 1, 0.0)});
    run.snapshot_times.push_back(cfg.snapshot_times[snap_ptr]);
    ++snap_ptr;
  }

  run.final_field = HeatField{p};
  return run;
}

CoupledState solve_resolvent(const Parameters& P, const CoupledState& rhs,
                             const SpatialGrid& g) {
  P.validate();
  if (P.c == 0.0) throw std::invalid_argument("solve_resolvent: c must be nonzero");
  if (!(std::abs(P.b * P.d / P.c) <= 1.0))
    throw std::invalid_argument("solve_resolvent: requires |bd/c| <= 1");
  if (!(P.c >= kPi * kPi / 8.0))
    throw std::invalid_argument("solve_resolvent: requires c >= pi^2/8");

  const int n = g.nx();
  const double h = g.h();
  const double ih2 = 1.0 / (h * h);
  const double ie = 1.0 / P.epsilon;
  const auto& u0 = rhs.wave.u;
  const auto& v0 = rhs.wave.v;
  const auto& q0 = rhs.heat.p;
  if (static_cast<int>(u0.size()) != n + 1 || static_cast<int>(q0.size()) != n + 1)
    throw std::invalid_argument("solve_resolvent: rhs does not match grid");

  const double v1_trace = u0[n];  // v = u0, so v(1) is known

  // u block: tridiagonal in u_1..u_n with the scalar coupling p(0)
  Tridiagonal Tu;
  Tu.lower.assign(n - 1, ih2);
  Tu.diag.assign(n, -2.0 * ih2);
  Tu.upper.assign(n - 1, ih2);
  Tu.lower[n - 2] = 2.0 * ih2;

  std::vector<double> ru(n);
  for (int j = 1; j <= n; ++j) ru[j - 1] = v0[j];
  ru[n - 1] += 2.0 * P.a / h * v1_trace;
  std::vector<double> u_part = Tu.solve(ru);

  std::vector<double> su(n, 0.0);
  su[n - 1] = -2.0 * P.b / h;
  std::vector<double> u_hom = Tu.solve(su);

  // p block: tridiagonal in p_0..p_n with the scalar coupling u(1)
  Tridiagonal Tp;
  Tp.lower.assign(n, ie * ih2);
  Tp.diag.assign(n + 1, -2.0 * ie * ih2);
  Tp.upper.assign(n, ie * ih2);
  Tp.diag[0] = ie * (-2.0 - 2.0 * h * P.c) * ih2;
  Tp.upper[0] = ie * 2.0 * ih2;
  Tp.lower[n - 1] = ie * 2.0 * ih2;

  std::vector<double> rp(q0);
  std::vector<double> p_part = Tp.solve(rp);

  std::vector<double> sp(n + 1, 0.0);
  sp[n] = -ie * 2.0 * P.d / h;
  std::vector<double> p_hom = Tp.solve(sp);

  // close the 2x2 coupling: u(1) = u_part(1) + p(0) u_hom(1),
  //                         p(0) = p_part(0) + u(1) p_hom(0)
  const double det = 1.0 - u_hom[n - 1] * p_hom[0];
  if (std::abs(det) < 1e-12 * (1.0 + std::abs(u_hom[n - 1] * p_hom[0])))
    throw NumericalError("solve_resolvent: singular boundary coupling");
  const double u1_val = (u_part[n - 1] + p_part[0] * u_hom[n - 1]) / det;
  const double p0_val = p_part[0] + u1_val * p_hom[0];

  CoupledState out;
  out.t = rhs.t;
  out.wave.u.assign(n + 1, 0.0);
  out.wave.v = u0;  // first component of the generator equation
  out.wave.v[0] = 0.0;
  out.heat.p.assign(n + 1, 0.0);
  for (int j = 1; j <= n; ++j) out.wave.u[j] = u_part[j - 1] + p0_val * u_hom[j - 1];
  for (int j = 0; j <= n; ++j) out.heat.p[j] = p_part[j] + u1_val * p_hom[j];
  return out;
}

BoundaryResiduals boundary_residuals(const CoupledState& s, const Parameters& P,
                                     const SpatialGrid& g) {
  const auto ux = derivative(s.wave.u, g);
  const auto px = derivative(s.heat.p, g);
  BoundaryResiduals r;
  r.wave_robin = ux.back() + P.a * s.wave.v.back() - P.b * s.heat.p.front();
  r.heat_robin = px.front() - P.c * s.heat.p.front();
  r.heat_flux = px.back() - P.d * s.wave.u.back();
  return r;
}

}  // namespace waveheat
