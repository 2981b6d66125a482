#include "waveheat/params.hpp"

#include <stdexcept>

namespace waveheat {

void Parameters::validate() const {
  if (!(epsilon > 0.0)) throw std::invalid_argument("Parameters: epsilon must be > 0");
  if (!(mu > 0.0)) throw std::invalid_argument("Parameters: mu must be > 0");
}

}  // namespace waveheat
