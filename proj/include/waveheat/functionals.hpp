#pragma once

#include "waveheat/fields.hpp"
#include "waveheat/grid.hpp"
#include "waveheat/params.hpp"

#include <vector>

namespace waveheat {

/// Trapezoid quadrature of the integral of f^2 over [0,1].
double l2_norm_sq(const std::vector<double>& f, const SpatialGrid& g);

/// Second-order finite-difference derivative: centered stencils at interior
/// nodes, one-sided three-point stencils at x=0 and x=1. Exact on quadratics.
std::vector<double> derivative(const std::vector<double>& f, const SpatialGrid& g);

/// Full H1 norm squared: integral of f^2 + f_x^2 (f_x via derivative()).
double h1_norm_sq(const std::vector<double>& f, const SpatialGrid& g);

/// Weighted wave inner product
///   2 * int_0^1 e^{mu x}(u_x+v)(w_x+z) + e^{-mu x}(u_x-v)(w_x-z) dx,
/// the leading 2 multiplying the whole integral.
double h_inner_product_wave(const WaveField& w1, const WaveField& w2, double mu,
                            const SpatialGrid& g);

/// V1(u, u_t) = 1/2 int e^{mu x}(u_t+u_x)^2 + e^{-mu x}(u_t-u_x)^2 dx.
double v1(const WaveField& w, double mu, const SpatialGrid& g);

/// W2(p) = 1/2 ||p||^2_{L2}.
double w2(const HeatField& p, const SpatialGrid& g);

/// V2(p) = 1/2 int p_x^2 + (c/2) p(0)^2; requires c > 0.
double v2(const HeatField& p, double c, const SpatialGrid& g);

/// E = 1/2 (h_inner_product_wave(w,w) + epsilon * ||p||^2_{L2}).
double total_energy(const CoupledState& s, const Parameters& params, const SpatialGrid& g);

/// Quasi-steady temperature profile p(x) = (d/c + x d) * u1_trace; c != 0.
HeatField quasi_steady_state(double u1_trace, double c, double d, const SpatialGrid& g);

}  // namespace waveheat
