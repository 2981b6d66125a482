#include "waveheat/csv.hpp"

#include "waveheat/errors.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace waveheat {

std::string format_float(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  return out;
}

}  // namespace

void write_energy_csv(const std::string& path, const std::vector<EnergyRecord>& records) {
  std::ofstream out = open_out(path);
  out << "t,E,V1,W2,V2,u1,ut1,p0,p1\n";
  for (const auto& r : records)
    out << format_float(r.t) << ',' << format_float(r.E) << ',' << format_float(r.V1) << ','
        << format_float(r.W2) << ',' << format_float(r.V2) << ',' << format_float(r.u1) << ','
        << format_float(r.ut1) << ',' << format_float(r.p0) << ',' << format_float(r.p1)
        << '\n';
}

void write_spectrum_csv(const std::string& path,
                        const std::vector<std::complex<double>>& eigenvalues) {
  std::ofstream out = open_out(path);
  out << "re,im\n";
  for (const auto& z : eigenvalues)
    out << format_float(z.real()) << ',' << format_float(z.imag()) << '\n';
}

void write_tikhonov_outputs(const std::string& out_dir, const TikhonovSweepResult& result) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  {
    std::ofstream out = open_out((fs::path(out_dir) / "sweep.csv").string());
    out << "epsilon,e_u_sup,e_p_sup\n";
    for (const auto& pt : result.points)
      out << format_float(pt.epsilon) << ',' << format_float(pt.e_u_max_weighted) << ','
          << format_float(pt.e_p_max_weighted) << '\n';
  }
  for (const auto& pt : result.points) {
    char name[64];
    std::snprintf(name, sizeof(name), "errors_%.6g.csv", pt.epsilon);
    std::ofstream out = open_out((fs::path(out_dir) / name).string());
    out << "t,e_u,e_p,e_u_weighted,e_p_weighted\n";
    for (size_t j = 0; j < pt.t_grid.size(); ++j) {
      const double w = std::exp(result.mu * pt.t_grid[j] / 8.0);
      out << format_float(pt.t_grid[j]) << ',' << format_float(pt.e_u[j]) << ','
          << format_float(pt.e_p[j]) << ',' << format_float(w * pt.e_u[j]) << ','
          << format_float(w * pt.e_p[j]) << '\n';
    }
  }
  {
    std::ofstream out = open_out((fs::path(out_dir) / "slopes.txt").string());
    if (result.slopes_valid) {
      out << "e_u_slope = " << format_float(result.slope_e_u) << "\n";
      out << "e_p_slope = " << format_float(result.slope_e_p) << "\n";
    } else {
      out << "e_u_slope = undefined (zero errors)\n";
      out << "e_p_slope = undefined (zero errors)\n";
    }
  }
}

std::vector<std::vector<double>> read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open csv file '" + path + "'");
  std::vector<std::vector<double>> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace waveheat
