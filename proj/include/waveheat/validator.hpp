#pragma once

#include "waveheat/params.hpp"

#include <string>
#include <vector>

namespace waveheat {

/// One evaluated hypothesis: lhs `op` rhs with op in {"<=", ">="}.
struct Condition {
  std::string label;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string op = "<=";
  bool satisfied = false;
};

/// Per-theorem hypothesis evaluation. all_satisfied is the conjunction of
/// the condition flags; notes carry informational flags that do not gate it.
struct ConditionReport {
  std::string theorem_id;  // T1_1, T1_3_i, T1_3_ii, T1_4
  std::vector<Condition> conditions;
  bool all_satisfied = false;
  std::vector<std::string> notes;
};

enum class Theorem13Variant { i, ii };

/// Both closed forms for the admissibility threshold in mu, plus the
/// numerical root of q(a, .) when one exists on (0, 10].
struct MuStarResult {
  double paper_form = 0.0;   // ln(|1+a| / (sqrt(2)|1-a|)); -inf when a = -1
  bool paper_positive = false;
  double q_root = 0.0;       // bisection root of q(a, mu) = 0
  bool q_root_exists = false;
};

/// eta = (sqrt(3)-1)/(sqrt(3)+1) = 2 - sqrt(3).
double eta();

/// q(a, mu) = -(3/2) e^{mu} (1-a)^2 + (1/2) e^{-mu} (1+a)^2.
double q_of(double a, double mu);

/// F(mu) = 2 sinh(mu) + 10 cosh(mu).
double big_f(double mu);

/// Threshold mu*(a). Throws std::domain_error for a = 1 (the closed form
/// divides by zero); a = -1 yields paper_form = -inf and no q-root.
MuStarResult mu_star(double a);

ConditionReport check_theorem_1_1(const Parameters& params);
ConditionReport check_theorem_1_3(const Parameters& params, Theorem13Variant variant);
ConditionReport check_theorem_1_4(const Parameters& params);

}  // namespace waveheat
