#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "waveheat/functionals.hpp"
#include "waveheat/grid.hpp"

#include <cmath>
#include <random>

using namespace waveheat;

namespace {

std::vector<double> sampled(const SpatialGrid& g, double (*f)(double)) {
  std::vector<double> out(g.num_nodes());
  for (int j = 0; j < g.num_nodes(); ++j) out[j] = f(g.node(j));
  return out;
}

std::vector<double> random_samples(std::mt19937_64& eng, const SpatialGrid& g) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<double> out(g.num_nodes());
  for (auto& x : out) x = unit(eng);
  return out;
}

WaveField random_wave(std::mt19937_64& eng, const SpatialGrid& g) {
  WaveField w;
  w.u = random_samples(eng, g);
  w.u[0] = 0.0;
  w.v = random_samples(eng, g);
  return w;
}

}  // namespace

TEST_CASE("grid: nodes and weights") {
  const SpatialGrid g(10);
  CHECK(g.h() == doctest::Approx(0.1));
  CHECK(g.node(0) == 0.0);
  CHECK(g.node(10) == 1.0);
  double sum = 0.0;
  for (double w : g.quad_weights()) sum += w;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(SpatialGrid(7), std::invalid_argument);
}

TEST_CASE("l2_norm_sq: basic values") {
  const SpatialGrid g(100);
  CHECK(l2_norm_sq(std::vector<double>(101, 0.0), g) == 0.0);
  CHECK(l2_norm_sq(std::vector<double>(101, 1.0), g) == doctest::Approx(1.0).epsilon(1e-14));
  const auto x = sampled(g, [](double t) { return t; });
  CHECK(l2_norm_sq(x, g) == doctest::Approx(1.0 / 3.0).epsilon(1e-4));
  CHECK_THROWS_AS(l2_norm_sq(std::vector<double>(5, 0.0), g), std::invalid_argument);
}

TEST_CASE("l2_norm_sq: second-order refinement") {
  // trapezoid error on int x^2 halves by 4x per grid doubling
  double errors[3];
  const int sizes[3] = {25, 50, 100};
  for (int i = 0; i < 3; ++i) {
    const SpatialGrid g(sizes[i]);
    errors[i] = std::abs(l2_norm_sq(sampled(g, [](double t) { return t; }), g) - 1.0 / 3.0);
  }
  for (int i = 0; i + 1 < 3; ++i) {
    const double ratio = errors[i] / errors[i + 1];
    CHECK(ratio > 3.5);
    CHECK(ratio < 4.5);
  }
}

TEST_CASE("derivative: exactness on low-degree polynomials") {
  const SpatialGrid g(50);
  const auto dc = derivative(std::vector<double>(51, 3.0), g);
  for (double v : dc) CHECK(v == doctest::Approx(0.0).epsilon(1e-13));

  const auto dx = derivative(sampled(g, [](double t) { return t; }), g);
  for (double v : dx) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

  const auto dq = derivative(sampled(g, [](double t) { return t * t; }), g);
  for (int j = 0; j <= 50; ++j) CHECK(dq[j] == doctest::Approx(2.0 * g.node(j)).epsilon(1e-12));
}

TEST_CASE("h_inner_product_wave: values, symmetry, bilinearity") {
  const SpatialGrid g(64);
  WaveField zero;
  zero.u.assign(65, 0.0);
  zero.v.assign(65, 0.0);
  CHECK(h_inner_product_wave(zero, zero, 0.3, g) == 0.0);

  WaveField ones = zero;
  ones.v.assign(65, 1.0);
  CHECK(h_inner_product_wave(ones, ones, 0.0, g) == doctest::Approx(4.0).epsilon(1e-13));

  std::mt19937_64 eng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const WaveField w1 = random_wave(eng, g);
    const WaveField w2f = random_wave(eng, g);
    const double mu = 0.1 + 0.9 * (trial % 10) / 10.0;
    const double lhs = h_inner_product_wave(w1, w2f, mu, g);
    const double rhs = h_inner_product_wave(w2f, w1, mu, g);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }

  // bilinearity in the first argument
  std::mt19937_64 eng2(99);
  const WaveField w1 = random_wave(eng2, g);
  const WaveField w2f = random_wave(eng2, g);
  const WaveField w3 = random_wave(eng2, g);
  WaveField combo;
  combo.u.resize(65);
  combo.v.resize(65);
  for (int j = 0; j <= 64; ++j) {
    combo.u[j] = 2.0 * w1.u[j] - 3.0 * w2f.u[j];
    combo.v[j] = 2.0 * w1.v[j] - 3.0 * w2f.v[j];
  }
  const double left = h_inner_product_wave(combo, w3, 0.5, g);
  const double right = 2.0 * h_inner_product_wave(w1, w3, 0.5, g) -
                       3.0 * h_inner_product_wave(w2f, w3, 0.5, g);
  CHECK(left == doctest::Approx(right).epsilon(1e-11));
}

TEST_CASE("v1: values and sandwich") {
  const SpatialGrid g(64);
  WaveField zero;
  zero.u.assign(65, 0.0);
  zero.v.assign(65, 0.0);
  CHECK(v1(zero, 0.7, g) == 0.0);

  WaveField ones = zero;
  ones.v.assign(65, 1.0);
  CHECK(v1(ones, 0.0, g) == doctest::Approx(1.0).epsilon(1e-13));

  std::mt19937_64 eng(5150);
  const double mus[3] = {0.1, 0.5, 1.0};
  for (int trial = 0; trial < 1000; ++trial) {
    const WaveField w = random_wave(eng, g);
    const double mu = mus[trial % 3];
    const double core = l2_norm_sq(derivative(w.u, g), g) + l2_norm_sq(w.v, g);
    const double val = v1(w, mu, g);
    CHECK(val >= std::exp(-mu) * core * (1.0 - 1e-12));
    CHECK(val <= std::exp(mu) * core * (1.0 + 1e-12));
  }
}

TEST_CASE("w2 and v2: values") {
  const SpatialGrid g(100);
  CHECK(w2(HeatField{std::vector<double>(101, 0.0)}, g) == 0.0);
  CHECK(w2(HeatField{std::vector<double>(101, 2.0)}, g) == doctest::Approx(2.0).epsilon(1e-13));
  const HeatField px{sampled(g, [](double t) { return t; })};
  CHECK(w2(px, g) == doctest::Approx(1.0 / 6.0).epsilon(1e-4));

  CHECK(v2(HeatField{std::vector<double>(101, 0.0)}, 1.0, g) == 0.0);
  CHECK(v2(HeatField{std::vector<double>(101, 1.0)}, 4.0, g) ==
        doctest::Approx(2.0).epsilon(1e-13));
  CHECK(v2(px, 2.0, g) == doctest::Approx(0.5).epsilon(1e-4));
  CHECK_THROWS_AS(v2(px, 0.0, g), std::invalid_argument);
  CHECK_THROWS_AS(v2(px, -1.0, g), std::invalid_argument);
}

TEST_CASE("total_energy: values and algebraic identity") {
  const SpatialGrid g(64);
  Parameters P;
  P.epsilon = 0.25;
  P.mu = 0.0;

  CoupledState zero;
  zero.wave.u.assign(65, 0.0);
  zero.wave.v.assign(65, 0.0);
  zero.heat.p.assign(65, 0.0);
  CHECK(total_energy(zero, P, g) == 0.0);

  CoupledState s = zero;
  s.wave.v.assign(65, 1.0);
  CHECK(total_energy(s, P, g) == doctest::Approx(2.0).epsilon(1e-13));

  std::mt19937_64 eng(31337);
  for (int trial = 0; trial < 50; ++trial) {
    CoupledState r;
    r.wave = random_wave(eng, g);
    r.heat.p = random_samples(eng, g);
    Parameters Q = P;
    Q.mu = 0.1 + 0.01 * trial;
    Q.epsilon = 0.01 + 0.02 * trial;
    const double direct = total_energy(r, Q, g);
    const double identity =
        0.5 * h_inner_product_wave(r.wave, r.wave, Q.mu, g) + Q.epsilon * w2(r.heat, g);
    CHECK(direct == doctest::Approx(identity).epsilon(1e-14));
  }
}

TEST_CASE("quasi_steady_state: formula and residuals") {
  const SpatialGrid g(40);
  const HeatField z = quasi_steady_state(0.0, 4.0, 1.0, g);
  for (double v : z.p) CHECK(v == 0.0);

  const HeatField q = quasi_steady_state(2.0, 4.0, 1.0, g);
  CHECK(q.p.front() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(q.p.back() == doctest::Approx(2.5).epsilon(1e-14));

  const auto px = derivative(q.p, g);
  CHECK(px.front() - 4.0 * q.p.front() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(px.back() - 1.0 * 2.0 == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS_AS(quasi_steady_state(1.0, 0.0, 1.0, g), std::invalid_argument);
}
