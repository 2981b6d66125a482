#include "waveheat/grid.hpp"

#include <stdexcept>

namespace waveheat {

SpatialGrid::SpatialGrid(int nx) : nx_(nx) {
  if (nx < 8) throw std::invalid_argument("SpatialGrid: nx must be >= 8");
  h_ = 1.0 / nx;
  nodes_.resize(nx + 1);
  weights_.resize(nx + 1);
  for (int j = 0; j <= nx; ++j) {
    nodes_[j] = static_cast<double>(j) * h_;
    weights_[j] = (j == 0 || j == nx) ? 0.5 * h_ : h_;
  }
  nodes_[nx] = 1.0;
}

}  // namespace waveheat
