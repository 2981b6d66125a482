#pragma once

namespace waveheat {

/// Execution policy for the embarrassingly parallel layers (fuzz trials,
/// epsilon sweep). The serial path is the reference the tests compare the
/// OpenMP path against; both produce bit-identical results.
enum class Exec { serial, parallel };

}  // namespace waveheat
