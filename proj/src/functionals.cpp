#include "waveheat/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace waveheat {

namespace {

void check_size(const std::vector<double>& f, const SpatialGrid& g, const char* what) {
  if (static_cast<int>(f.size()) != g.num_nodes())
    throw std::invalid_argument(std::string(what) + ": sample count does not match grid");
}

}  // namespace

double l2_norm_sq(const std::vector<double>& f, const SpatialGrid& g) {
  check_size(f, g, "l2_norm_sq");
  const auto& w = g.quad_weights();
  double acc = 0.0;
  for (int j = 0; j < g.num_nodes(); ++j) acc += w[j] * f[j] * f[j];
  return acc;
}

std::vector<double> derivative(const std::vector<double>& f, const SpatialGrid& g) {
  check_size(f, g, "derivative");
  const int n = g.nx();
  const double h = g.h();
  std::vector<double> d(n + 1);
  d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
  for (int j = 1; j < n; ++j) d[j] = (f[j + 1] - f[j - 1]) / (2.0 * h);
  d[n] = (3.0 * f[n] - 4.0 * f[n - 1] + f[n - 2]) / (2.0 * h);
  return d;
}

double h1_norm_sq(const std::vector<double>& f, const SpatialGrid& g) {
  return l2_norm_sq(f, g) + l2_norm_sq(derivative(f, g), g);
}

double h_inner_product_wave(const WaveField& w1, const WaveField& w2, double mu,
                            const SpatialGrid& g) {
  check_size(w1.u, g, "h_inner_product_wave");
  check_size(w1.v, g, "h_inner_product_wave");
  check_size(w2.u, g, "h_inner_product_wave");
  check_size(w2.v, g, "h_inner_product_wave");
  const auto ux1 = derivative(w1.u, g);
  const auto ux2 = derivative(w2.u, g);
  const auto& w = g.quad_weights();
  double acc = 0.0;
  for (int j = 0; j < g.num_nodes(); ++j) {
    const double x = g.node(j);
    acc += w[j] * (std::exp(mu * x) * (ux1[j] + w1.v[j]) * (ux2[j] + w2.v[j]) +
                   std::exp(-mu * x) * (ux1[j] - w1.v[j]) * (ux2[j] - w2.v[j]));
  }
  return 2.0 * acc;
}

double v1(const WaveField& w, double mu, const SpatialGrid& g) {
  check_size(w.u, g, "v1");
  check_size(w.v, g, "v1");
  const auto ux = derivative(w.u, g);
  const auto& qw = g.quad_weights();
  double acc = 0.0;
  for (int j = 0; j < g.num_nodes(); ++j) {
    const double x = g.node(j);
    const double plus = w.v[j] + ux[j];
    const double minus = w.v[j] - ux[j];
    acc += qw[j] * (std::exp(mu * x) * plus * plus + std::exp(-mu * x) * minus * minus);
  }
  return 0.5 * acc;
}

double w2(const HeatField& p, const SpatialGrid& g) { return 0.5 * l2_norm_sq(p.p, g); }

double v2(const HeatField& p, double c, const SpatialGrid& g) {
  if (!(c > 0.0)) throw std::invalid_argument("v2: c must be > 0");
  const auto px = derivative(p.p, g);
  return 0.5 * l2_norm_sq(px, g) + 0.5 * c * p.p[0] * p.p[0];
}

double total_energy(const CoupledState& s, const Parameters& params, const SpatialGrid& g) {
  return 0.5 * (h_inner_product_wave(s.wave, s.wave, params.mu, g) +
                params.epsilon * l2_norm_sq(s.heat.p, g));
}

HeatField quasi_steady_state(double u1_trace, double c, double d, const SpatialGrid& g) {
  if (c == 0.0) throw std::invalid_argument("quasi_steady_state: c must be nonzero");
  HeatField out;
  out.p.resize(g.num_nodes());
  for (int j = 0; j < g.num_nodes(); ++j)
    out.p[j] = (d / c + g.node(j) * d) * u1_trace;
  return out;
}

}  // namespace waveheat
