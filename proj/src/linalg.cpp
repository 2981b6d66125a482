#include "waveheat/linalg.hpp"

#include "waveheat/errors.hpp"

#include <cmath>
#include <utility>

namespace waveheat {

std::vector<double> matvec(const DenseMatrix& A, const std::vector<double>& x) {
  std::vector<double> y(A.rows(), 0.0);
  const int n = A.cols();
  for (int i = 0; i < A.rows(); ++i) {
    const double* row = A.data() + static_cast<long>(i) * n;
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
  return y;
}

LuFactorization::LuFactorization(DenseMatrix a) : lu_(std::move(a)), pivots_(lu_.rows()) {
  const int n = lu_.rows();
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(lu_(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double v = std::abs(lu_(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) throw NumericalError("LU: singular matrix (zero pivot)");
    pivots_[k] = piv;
    if (piv != k)
      for (int j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(piv, j));
    const double inv = 1.0 / lu_(k, k);
    for (int i = k + 1; i < n; ++i) {
      const double m = lu_(i, k) * inv;
      lu_(i, k) = m;
      if (m != 0.0) {
        const double* rk = lu_.data() + static_cast<long>(k) * n;
        double* ri = lu_.data() + static_cast<long>(i) * n;
        for (int j = k + 1; j < n; ++j) ri[j] -= m * rk[j];
      }
    }
  }
}

void LuFactorization::solve_in_place(std::vector<double>& x) const {
  const int n = lu_.rows();
  for (int k = 0; k < n; ++k)
    if (pivots_[k] != k) std::swap(x[k], x[pivots_[k]]);
  for (int i = 1; i < n; ++i) {
    const double* row = lu_.data() + static_cast<long>(i) * n;
    double acc = x[i];
    for (int j = 0; j < i; ++j) acc -= row[j] * x[j];
    x[i] = acc;
  }
  for (int i = n - 1; i >= 0; --i) {
    const double* row = lu_.data() + static_cast<long>(i) * n;
    double acc = x[i];
    for (int j = i + 1; j < n; ++j) acc -= row[j] * x[j];
    x[i] = acc / row[i];
  }
}

std::vector<double> Tridiagonal::solve(std::vector<double> rhs) const {
  const int m = n();
  std::vector<double> c_star(m - 1);
  if (diag[0] == 0.0) throw NumericalError("Thomas: zero pivot");
  c_star[0] = upper[0] / diag[0];
  rhs[0] /= diag[0];
  for (int i = 1; i < m; ++i) {
    const double denom = diag[i] - lower[i - 1] * c_star[i - 1];
    if (denom == 0.0) throw NumericalError("Thomas: zero pivot");
    const double inv = 1.0 / denom;
    if (i < m - 1) c_star[i] = upper[i] * inv;
    rhs[i] = (rhs[i] - lower[i - 1] * rhs[i - 1]) * inv;
  }
  for (int i = m - 2; i >= 0; --i) rhs[i] -= c_star[i] * rhs[i + 1];
  return rhs;
}

}  // namespace waveheat
