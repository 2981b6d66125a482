#include "waveheat/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace waveheat {

namespace {

constexpr double kPi = std::numbers::pi;

// 5-point Gauss-Legendre rule on [-1, 1]
constexpr double kGlNode[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                               0.5384693101056831, 0.9061798459386640};
constexpr double kGlWeight[5] = {0.2369268850561891, 0.4786286704993665,
                                 0.5688888888888889, 0.4786286704993665,
                                 0.2369268850561891};

template <class F>
double integrate(F&& f, int cells) {
  double acc = 0.0;
  const double h = 1.0 / cells;
  for (int c = 0; c < cells; ++c) {
    const double mid = (c + 0.5) * h;
    double cell = 0.0;
#pragma omp simd reduction(+ : cell)
    for (int q = 0; q < 5; ++q)
      cell += kGlWeight[q] * f(mid + 0.5 * h * kGlNode[q]);
    acc += 0.5 * h * cell;
  }
  return acc;
}

int quad_cells(const SpatialGrid& g) { return std::max(400, g.nx()); }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

void require_vanishing(const TestFunction& f, const char* where) {
  if (f.constraint != FnConstraint::vanish_at_0)
    throw std::invalid_argument(std::string(where) + ": requires a vanish_at_0 function");
}

}  // namespace

double TestFunction::value(double x) const {
  double acc = a0 + lin * x;
  for (size_t k = 0; k < sin_coeffs.size(); ++k) {
    const double kk = kPi * static_cast<double>(k + 1);
    acc += sin_coeffs[k] * std::sin(kk * x) + cos_coeffs[k] * std::cos(kk * x);
  }
  return acc;
}

double TestFunction::deriv(double x) const {
  double acc = lin;
  for (size_t k = 0; k < sin_coeffs.size(); ++k) {
    const double kk = kPi * static_cast<double>(k + 1);
    acc += kk * (sin_coeffs[k] * std::cos(kk * x) - cos_coeffs[k] * std::sin(kk * x));
  }
  return acc;
}

TestFunction random_test_function(std::uint64_t seed, int degree, FnConstraint constraint) {
  if (degree < 1 || degree > 16)
    throw std::invalid_argument("random_test_function: degree must be in [1, 16]");
  std::mt19937_64 eng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  TestFunction f;
  f.a0 = unit(eng);
  f.lin = unit(eng);
  f.sin_coeffs.resize(degree);
  f.cos_coeffs.resize(degree);
  for (int k = 0; k < degree; ++k) {
    f.sin_coeffs[k] = unit(eng);
    f.cos_coeffs[k] = unit(eng);
  }
  f.constraint = constraint;
  if (constraint == FnConstraint::vanish_at_0) f.a0 -= f.value(0.0);
  return f;
}

std::string to_string(LemmaId id) {
  switch (id) {
    case LemmaId::A1: return "A1";
    case LemmaId::A2: return "A2";
    case LemmaId::A3: return "A3";
    case LemmaId::A4_i0: return "A4_i0";
    case LemmaId::A4_i1: return "A4_i1";
  }
  return "?";
}

LemmaResult check_lemma(LemmaId id, const TestFunction& f, const SpatialGrid& g) {
  const int cells = quad_cells(g);
  LemmaResult res;
  switch (id) {
    case LemmaId::A1: {
      const double w1 = f.value(1.0), w0 = f.value(0.0);
      const double dx2 = integrate([&](double x) { const double d = f.deriv(x); return d * d; },
                                   cells);
      res.lhs = w1 * w1;
      res.rhs = 2.0 * w0 * w0 + 2.0 * dx2;
      res.satisfied = res.lhs <= res.rhs;
      break;
    }
    case LemmaId::A2: {
      require_vanishing(f, "check_lemma(A2)");
      const double p1 = f.value(1.0);
      const double dx2 = integrate([&](double x) { const double d = f.deriv(x); return d * d; },
                                   cells);
      res.lhs = p1 * p1;
      res.rhs = std::sqrt(dx2);  // the unsquared norm, as printed
      res.satisfied = res.lhs <= res.rhs;
      VariantResult sq;
      sq.label = "A2 squared";
      sq.lhs = res.lhs;
      sq.rhs = dx2;
      sq.satisfied = sq.lhs <= sq.rhs;
      res.variant = sq;
      break;
    }
    case LemmaId::A3:
      throw std::invalid_argument("check_lemma: A3 needs the pair overload");
    case LemmaId::A4_i0:
    case LemmaId::A4_i1: {
      const double wi = f.value(id == LemmaId::A4_i0 ? 0.0 : 1.0);
      const double w2 = integrate([&](double x) { const double v = f.value(x); return v * v; },
                                  cells);
      const double dx2 = integrate([&](double x) { const double d = f.deriv(x); return d * d; },
                                   cells);
      res.lhs = w2;
      res.rhs = wi * wi + 4.0 / (kPi * kPi) * dx2;
      res.satisfied = res.lhs <= res.rhs;
      VariantResult dbl;
      dbl.label = "A4 doubled";
      dbl.lhs = w2;
      dbl.rhs = 2.0 * wi * wi + 8.0 / (kPi * kPi) * dx2;
      dbl.satisfied = dbl.lhs <= dbl.rhs;
      res.variant = dbl;
      break;
    }
  }
  return res;
}

LemmaResult check_lemma_pair(const TestFunction& u, const TestFunction& v, double mu,
                             const SpatialGrid& g) {
  require_vanishing(u, "check_lemma_pair(A3)");
  if (!(mu > 0.0)) throw std::invalid_argument("check_lemma_pair(A3): mu must be > 0");
  const int cells = quad_cells(g);
  LemmaResult res;
  res.lhs = -mu * integrate(
                      [&](double x) {
                        const double ux = u.deriv(x), vv = v.value(x);
                        const double plus = ux + vv, minus = ux - vv;
                        return std::exp(mu * x) * plus * plus +
                               std::exp(-mu * x) * minus * minus;
                      },
                      cells);
  const double u1 = u.value(1.0);
  res.rhs = -2.0 * mu * std::exp(-mu) * u1 * u1;
  res.satisfied = res.lhs <= res.rhs;
  return res;
}

namespace {

struct TrialOutcome {
  LemmaResult result;
  TestFunction f;
  std::optional<TestFunction> v;
  double mu = 0.0;
};

TestFunction family_1_plus_x(bool mirrored) {
  // w = 1 + x, and its mirror 2 - x for the i = 1 endpoint
  TestFunction f;
  f.a0 = mirrored ? 2.0 : 1.0;
  f.lin = mirrored ? -1.0 : 1.0;
  f.sin_coeffs.assign(1, 0.0);
  f.cos_coeffs.assign(1, 0.0);
  return f;
}

TrialOutcome run_trial(LemmaId id, long trial, std::uint64_t seed, const SpatialGrid& g) {
  TrialOutcome out;
  const std::uint64_t tag = static_cast<std::uint64_t>(id) + 1;
  const std::uint64_t s1 = splitmix64(seed ^ splitmix64(tag * 0x100000001B3ULL + trial));
  const int degree = 1 + static_cast<int>(splitmix64(s1) % 8);

  switch (id) {
    case LemmaId::A1:
      out.f = random_test_function(s1, degree, FnConstraint::none);
      out.result = check_lemma(id, out.f, g);
      break;
    case LemmaId::A2:
      out.f = random_test_function(s1, degree, FnConstraint::vanish_at_0);
      out.result = check_lemma(id, out.f, g);
      break;
    case LemmaId::A3: {
      out.f = random_test_function(s1, degree, FnConstraint::vanish_at_0);
      out.v = random_test_function(splitmix64(s1 + 1), degree, FnConstraint::none);
      static constexpr double kMus[3] = {0.1, 0.5, 1.0};
      out.mu = kMus[trial % 3];
      out.result = check_lemma_pair(out.f, *out.v, out.mu, g);
      break;
    }
    case LemmaId::A4_i0:
    case LemmaId::A4_i1:
      out.f = (trial == 0) ? family_1_plus_x(id == LemmaId::A4_i1)
                           : random_test_function(s1, degree, FnConstraint::none);
      out.result = check_lemma(id, out.f, g);
      break;
  }
  return out;
}

void accumulate(LemmaStats& stats, const TrialOutcome& o, long trial, bool use_variant) {
  const double lhs = use_variant ? o.result.variant->lhs : o.result.lhs;
  const double rhs = use_variant ? o.result.variant->rhs : o.result.rhs;
  const bool ok = use_variant ? o.result.variant->satisfied : o.result.satisfied;
  ++stats.trials;
  const double margin = rhs - lhs;
  Counterexample witness;
  witness.trial = trial;
  witness.f = o.f;
  witness.v = o.v;
  witness.mu = o.mu;
  witness.lhs = lhs;
  witness.rhs = rhs;
  if (!stats.min_margin_witness || margin < stats.min_margin) {
    stats.min_margin = margin;
    stats.min_margin_witness = witness;
  }
  if (!ok) {
    ++stats.violations;
    stats.counterexamples.push_back(std::move(witness));
  }
}

}  // namespace

FuzzSummary fuzz_lemmas(long trials, std::uint64_t seed, Exec exec) {
  if (trials < 1) throw std::invalid_argument("fuzz_lemmas: trials must be >= 1");
  const SpatialGrid g(400);
  static constexpr LemmaId kIds[5] = {LemmaId::A1, LemmaId::A2, LemmaId::A3, LemmaId::A4_i0,
                                      LemmaId::A4_i1};

  std::vector<std::vector<TrialOutcome>> outcomes(5);
  for (auto& v : outcomes) v.resize(trials);

  if (exec == Exec::parallel) {
#pragma omp parallel for collapse(2) schedule(dynamic, 16)
    for (int li = 0; li < 5; ++li)
      for (long t = 0; t < trials; ++t) outcomes[li][t] = run_trial(kIds[li], t, seed, g);
  } else {
    for (int li = 0; li < 5; ++li)
      for (long t = 0; t < trials; ++t) outcomes[li][t] = run_trial(kIds[li], t, seed, g);
  }

  FuzzSummary sum;
  sum.trials = trials;
  sum.seed = seed;
  sum.printed.resize(5);
  for (int li = 0; li < 5; ++li) {
    sum.printed[li].name = to_string(kIds[li]);
    sum.printed[li].min_margin = std::numeric_limits<double>::infinity();
    for (long t = 0; t < trials; ++t) accumulate(sum.printed[li], outcomes[li][t], t, false);
  }
  const std::pair<int, const char*> variant_sources[3] = {
      {1, "A2_squared"}, {3, "A4_i0_doubled"}, {4, "A4_i1_doubled"}};
  for (const auto& [li, name] : variant_sources) {
    LemmaStats stats;
    stats.name = name;
    stats.min_margin = std::numeric_limits<double>::infinity();
    for (long t = 0; t < trials; ++t) accumulate(stats, outcomes[li][t], t, true);
    sum.variants.push_back(std::move(stats));
  }
  return sum;
}

}  // namespace waveheat
