#pragma once

#include <vector>

namespace waveheat {

/// Uniform grid on [0,1] with trapezoid quadrature weights
/// (h/2 at the endpoints, h at interior nodes).
class SpatialGrid {
 public:
  explicit SpatialGrid(int nx);

  int nx() const { return nx_; }
  double h() const { return h_; }
  int num_nodes() const { return nx_ + 1; }
  double node(int j) const { return nodes_[j]; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& quad_weights() const { return weights_; }

 private:
  int nx_;
  double h_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

}  // namespace waveheat
