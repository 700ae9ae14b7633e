#include "circdiv/rectification.hpp"

#include <cmath>
#include <numbers>

#include "circdiv/errors.hpp"

namespace circdiv {

// The base point, the center and the quadrant's far endpoint are collinear;
// similar triangles put the rectified quadrant at (d + 1) / d radii.
RectificationResult rectified_quadrant(double base_distance) {
  if (!(base_distance > 0.0) || !std::isfinite(base_distance)) {
    throw DomainError("base distance must be positive and finite");
  }
  return {base_distance, 2.0 * (base_distance + 1.0) / base_distance};
}

double exact_rectifier_distance() { return 2.0 / (std::numbers::pi - 2.0); }

}  // namespace circdiv
