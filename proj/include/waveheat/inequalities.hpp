#pragma once

#include "waveheat/exec.hpp"
#include "waveheat/grid.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace waveheat {

enum class FnConstraint { none, vanish_at_0 };

/// Finite Fourier-polynomial mix
///   a0 + lin * x + sum_k s_k sin(k pi x) + c_k cos(k pi x)
/// with an analytic derivative.
struct TestFunction {
  double a0 = 0.0;
  double lin = 0.0;
  std::vector<double> sin_coeffs;
  std::vector<double> cos_coeffs;
  FnConstraint constraint = FnConstraint::none;

  double value(double x) const;
  double deriv(double x) const;
};

/// Deterministic per seed; coefficients uniform in [-1, 1]; the vanish_at_0
/// constraint is enforced by subtracting the x=0 value. degree in [1, 16].
TestFunction random_test_function(std::uint64_t seed, int degree, FnConstraint constraint);

enum class LemmaId { A1, A2, A3, A4_i0, A4_i1 };

std::string to_string(LemmaId id);

struct VariantResult {
  std::string label;
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
};

/// lhs/rhs/satisfied evaluate the lemma as printed; variant carries the
/// repaired form where one exists (A2: squared right side, A4: doubled).
struct LemmaResult {
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
  std::optional<VariantResult> variant;
};

/// Both sides evaluated with composite Gauss-Legendre quadrature on
/// max(400, g.nx()) cells using the analytic derivative.
LemmaResult check_lemma(LemmaId id, const TestFunction& f, const SpatialGrid& g);

/// A3 takes the pair (u, v) and mu > 0; u must vanish at 0.
LemmaResult check_lemma_pair(const TestFunction& u, const TestFunction& v, double mu,
                             const SpatialGrid& g);

struct Counterexample {
  long trial = 0;
  TestFunction f;
  std::optional<TestFunction> v;  // A3 second argument
  double mu = 0.0;                // A3 weight
  double lhs = 0.0;
  double rhs = 0.0;
};

struct LemmaStats {
  std::string name;
  long trials = 0;
  long violations = 0;
  double min_margin = 0.0;  // min over trials of rhs - lhs
  std::optional<Counterexample> min_margin_witness;
  std::vector<Counterexample> counterexamples;
};

struct FuzzSummary {
  long trials = 0;
  std::uint64_t seed = 0;
  std::vector<LemmaStats> printed;   // A1, A2, A3, A4_i0, A4_i1 as stated
  std::vector<LemmaStats> variants;  // A2 squared, A4_i0 doubled, A4_i1 doubled
};

/// Randomized check of every appendix lemma; trial 0 of each A4 variant is
/// seeded with its 1+x-family counterexample. Deterministic per seed and
/// identical between serial and parallel execution. trials >= 1.
FuzzSummary fuzz_lemmas(long trials, std::uint64_t seed, Exec exec = Exec::parallel);

}  // namespace waveheat
