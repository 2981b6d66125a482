#pragma once

#include "waveheat/analysis.hpp"
#include "waveheat/fields.hpp"

#include <complex>
#include <string>
#include <vector>

namespace waveheat {

/// Scientific notation with 17 significant digits; round-trips doubles.
std::string format_float(double v);

/// Header exactly `t,E,V1,W2,V2,u1,ut1,p0,p1`, one row per record, LF endings.
void write_energy_csv(const std::string& path, const std::vector<EnergyRecord>& records);

/// Header `re,im`, rows sorted by descending real part.
void write_spectrum_csv(const std::string& path,
                        const std::vector<std::complex<double>>& eigenvalues);

/// sweep.csv (`epsilon,e_u_sup,e_p_sup`), slopes.txt and one
/// errors_<eps>.csv per epsilon under out_dir.
void write_tikhonov_outputs(const std::string& out_dir, const TikhonovSweepResult& result);

/// Numeric rows of a CSV written by the functions above (header skipped).
std::vector<std::vector<double>> read_csv(const std::string& path);

}  // namespace waveheat
