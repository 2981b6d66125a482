// Wall-clock comparison of the serial reference paths against the OpenMP
// ones, for the two embarrassingly parallel layers: lemma fuzzing and the
// Tikhonov epsilon sweep.

#include "waveheat/analysis.hpp"
#include "waveheat/inequalities.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>

using namespace waveheat;

namespace {

template <class F>
double time_seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main() {
  std::printf("threads available: %d\n", omp_get_max_threads());

  {
    const long trials = 400;
    const double ts = time_seconds([&] { fuzz_lemmas(trials, 7, Exec::serial); });
    const double tp = time_seconds([&] { fuzz_lemmas(trials, 7, Exec::parallel); });
    std::printf("fuzz_lemmas (%ld trials):   serial %.3fs  openmp %.3fs  speedup %.2fx\n",
                trials, ts, tp, ts / tp);
  }

  {
    SimulationConfig base;
    base.params = {0.5, 0.1, 4.0, 0.2, 0.01, 0.1};
    base.grid = SpatialGrid(100);
    base.dt = 0.005;
    base.t_final = 5.0;
    const std::vector<double> eps = {0.1, 0.05, 0.025, 0.0125};
    const SweepProfiles prof = default_sweep_profiles(base.grid);
    const double ts = time_seconds([&] { tikhonov_sweep(base, eps, prof, Exec::serial); });
    const double tp = time_seconds([&] { tikhonov_sweep(base, eps, prof, Exec::parallel); });
    std::printf("tikhonov_sweep (4 eps):     serial %.3fs  openmp %.3fs  speedup %.2fx\n", ts,
                tp, ts / tp);
  }
  return 0;
}
