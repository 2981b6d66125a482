#pragma once

namespace waveheat {

/// Constants of the coupled system: wave damping a, heat->wave gain b,
/// Robin coefficient c at x=0 of the heat equation, wave->heat gain d,
/// time-scale ratio epsilon and Lyapunov weight exponent mu.
struct Parameters {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double epsilon = 1.0;
  double mu = 0.1;

  /// Throws std::invalid_argument unless epsilon > 0 and mu > 0.
  void validate() const;
};

}  // namespace waveheat
