#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "waveheat/inequalities.hpp"

#include <cmath>
#include <numbers>

using namespace waveheat;

namespace {

constexpr double kPi = std::numbers::pi;

TestFunction constant(double value) {
  TestFunction f;
  f.a0 = value;
  f.sin_coeffs.assign(1, 0.0);
  f.cos_coeffs.assign(1, 0.0);
  return f;
}

TestFunction linear(double a0, double slope, FnConstraint c = FnConstraint::none) {
  TestFunction f;
  f.a0 = a0;
  f.lin = slope;
  f.sin_coeffs.assign(1, 0.0);
  f.cos_coeffs.assign(1, 0.0);
  f.constraint = c;
  return f;
}

}  // namespace

TEST_CASE("random_test_function: determinism and constraints") {
  const TestFunction f1 = random_test_function(42, 5, FnConstraint::none);
  const TestFunction f2 = random_test_function(42, 5, FnConstraint::none);
  CHECK(f1.a0 == f2.a0);
  CHECK(f1.lin == f2.lin);
  REQUIRE(f1.sin_coeffs.size() == 5);
  for (int k = 0; k < 5; ++k) {
    CHECK(f1.sin_coeffs[k] == f2.sin_coeffs[k]);
    CHECK(f1.cos_coeffs[k] == f2.cos_coeffs[k]);
  }

  const TestFunction g1 = random_test_function(43, 5, FnConstraint::none);
  bool any_diff = g1.a0 != f1.a0 || g1.lin != f1.lin;
  for (int k = 0; k < 5; ++k) any_diff = any_diff || g1.sin_coeffs[k] != f1.sin_coeffs[k];
  CHECK(any_diff);

  const TestFunction v = random_test_function(7, 8, FnConstraint::vanish_at_0);
  CHECK(std::abs(v.value(0.0)) < 1e-15);

  CHECK_THROWS_AS(random_test_function(1, 0, FnConstraint::none), std::invalid_argument);
  CHECK_THROWS_AS(random_test_function(1, 17, FnConstraint::none), std::invalid_argument);
}

TEST_CASE("TestFunction: analytic derivative matches finite differences") {
  const TestFunction f = random_test_function(99, 6, FnConstraint::none);
  for (double x : {0.1, 0.37, 0.5, 0.81}) {
    const double h = 1e-6;
    const double fd = (f.value(x + h) - f.value(x - h)) / (2.0 * h);
    CHECK(f.deriv(x) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("check_lemma: A1") {
  const SpatialGrid g(400);
  const LemmaResult r = check_lemma(LemmaId::A1, constant(1.0), g);
  CHECK(r.lhs == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.rhs == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(r.satisfied);
}

TEST_CASE("check_lemma: A2 printed vs squared") {
  const SpatialGrid g(400);
  // steep function: the printed (unsquared) bound breaks
  const LemmaResult steep = check_lemma(LemmaId::A2, linear(0.0, 4.0, FnConstraint::vanish_at_0), g);
  CHECK(steep.lhs == doctest::Approx(16.0).epsilon(1e-12));
  CHECK(steep.rhs == doctest::Approx(4.0).epsilon(1e-12));
  CHECK_FALSE(steep.satisfied);
  REQUIRE(steep.variant.has_value());
  CHECK(steep.variant->rhs == doctest::Approx(16.0).epsilon(1e-12));
  CHECK(steep.variant->satisfied);

  const LemmaResult mild = check_lemma(LemmaId::A2, linear(0.0, 0.5, FnConstraint::vanish_at_0), g);
  CHECK(mild.satisfied);
  CHECK(mild.variant->satisfied);

  CHECK_THROWS_AS(check_lemma(LemmaId::A2, linear(0.0, 1.0), g), std::invalid_argument);
}

TEST_CASE("check_lemma: A3 analytic example") {
  const SpatialGrid g(400);
  const TestFunction u = linear(0.0, 1.0, FnConstraint::vanish_at_0);  // u = x
  const TestFunction v = constant(0.0);
  const LemmaResult r = check_lemma_pair(u, v, 1.0, g);
  // lhs = -((e-1) + (1-1/e)), rhs = -2/e
  CHECK(r.lhs == doctest::Approx(-2.3504023872876029).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(-0.73575888234288464).epsilon(1e-12));
  CHECK(r.satisfied);

  CHECK_THROWS_AS(check_lemma_pair(linear(1.0, 1.0), v, 1.0, g), std::invalid_argument);
  CHECK_THROWS_AS(check_lemma_pair(u, v, 0.0, g), std::invalid_argument);
  CHECK_THROWS_AS(check_lemma(LemmaId::A3, u, g), std::invalid_argument);
}

TEST_CASE("check_lemma: A4 counterexample family and doubled repair") {
  const SpatialGrid g(400);
  const LemmaResult r = check_lemma(LemmaId::A4_i0, linear(1.0, 1.0), g);  // w = 1 + x
  CHECK(r.lhs == doctest::Approx(7.0 / 3.0).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(1.0 + 4.0 / (kPi * kPi)).epsilon(1e-12));
  CHECK_FALSE(r.satisfied);
  REQUIRE(r.variant.has_value());
  CHECK(r.variant->rhs == doctest::Approx(2.0 + 8.0 / (kPi * kPi)).epsilon(1e-12));
  CHECK(r.variant->satisfied);

  const LemmaResult m = check_lemma(LemmaId::A4_i1, linear(2.0, -1.0), g);  // w = 2 - x
  CHECK(m.lhs == doctest::Approx(7.0 / 3.0).epsilon(1e-12));
  CHECK_FALSE(m.satisfied);
  CHECK(m.variant->satisfied);
}

TEST_CASE("quadrature refinement: values stable from 400 to 800 cells") {
  const SpatialGrid g400(400);
  const SpatialGrid g800(800);
  for (std::uint64_t seed : {11ULL, 12ULL, 13ULL, 14ULL}) {
    const TestFunction f = random_test_function(seed, 8, FnConstraint::vanish_at_0);
    for (LemmaId id : {LemmaId::A2, LemmaId::A4_i0, LemmaId::A4_i1}) {
      const LemmaResult a = check_lemma(id, f, g400);
      const LemmaResult b = check_lemma(id, f, g800);
      CHECK(std::abs(a.lhs - b.lhs) <= 1e-6 * (std::abs(b.lhs) + 1e-30));
      CHECK(std::abs(a.rhs - b.rhs) <= 1e-6 * (std::abs(b.rhs) + 1e-30));
    }
  }
}

TEST_CASE("fuzz_lemmas: asserted variants hold, printed A4 is violated") {
  CHECK_THROWS_AS(fuzz_lemmas(0, 1), std::invalid_argument);

  const FuzzSummary sum = fuzz_lemmas(300, 2024, Exec::serial);
  REQUIRE(sum.printed.size() == 5);
  REQUIRE(sum.variants.size() == 3);

  CHECK(sum.printed[0].violations == 0);  // A1
  CHECK(sum.printed[2].violations == 0);  // A3
  for (const auto& v : sum.variants) CHECK(v.violations == 0);

  // the seeded 1+x family lands in trial 0 of both A4 variants
  CHECK(sum.printed[3].violations >= 1);
  REQUIRE(!sum.printed[3].counterexamples.empty());
  CHECK(sum.printed[3].counterexamples.front().trial == 0);
  CHECK(sum.printed[3].counterexamples.front().lhs == doctest::Approx(7.0 / 3.0).epsilon(1e-12));
  CHECK(sum.printed[4].violations >= 1);

  // determinism and serial/parallel agreement, bit for bit
  const FuzzSummary again = fuzz_lemmas(300, 2024, Exec::serial);
  const FuzzSummary par = fuzz_lemmas(300, 2024, Exec::parallel);
  for (const FuzzSummary* other : {&again, &par}) {
    for (size_t i = 0; i < sum.printed.size(); ++i) {
      CHECK(sum.printed[i].violations == other->printed[i].violations);
      CHECK(sum.printed[i].min_margin == other->printed[i].min_margin);
    }
    for (size_t i = 0; i < sum.variants.size(); ++i)
      CHECK(sum.variants[i].min_margin == other->variants[i].min_margin);
  }

  // a different seed explores different functions
  const FuzzSummary other_seed = fuzz_lemmas(300, 77, Exec::serial);
  CHECK(other_seed.printed[0].min_margin != sum.printed[0].min_margin);
}
