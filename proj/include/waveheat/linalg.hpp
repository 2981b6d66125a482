#pragma once

#include <vector>

namespace waveheat {

/// Dense row-major matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  double& operator()(int i, int j) { return data_[i * cols_ + j]; }
  double operator()(int i, int j) const { return data_[i * cols_ + j]; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

/// y = A x.
std::vector<double> matvec(const DenseMatrix& A, const std::vector<double>& x);

/// LU factorization with partial pivoting. Throws NumericalError on a
/// (numerically) singular matrix.
class LuFactorization {
 public:
  explicit LuFactorization(DenseMatrix a);
  void solve_in_place(std::vector<double>& x) const;
  int n() const { return static_cast<int>(pivots_.size()); }

 private:
  DenseMatrix lu_;
  std::vector<int> pivots_;
};

/// Tridiagonal system; lower/upper have size n-1. Solved with the Thomas
/// algorithm (no pivoting; the systems assembled here are diagonally
/// dominant up to the usual Neumann rows, where Thomas is still stable).
struct Tridiagonal {
  std::vector<double> lower, diag, upper;

  int n() const { return static_cast<int>(diag.size()); }
  std::vector<double> solve(std::vector<double> rhs) const;
};

}  // namespace waveheat
