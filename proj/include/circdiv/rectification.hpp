#ifndef CIRCDIV_RECTIFICATION_HPP
#define CIRCDIV_RECTIFICATION_HPP

namespace circdiv {

/// Rectifying the unit quadrant from a base point on the vertical diameter
/// line at `base_distance` from the center gives a segment of length
/// (base_distance + 1) / base_distance; twice that is the implied value of pi.
struct RectificationResult {
  double base_distance = 0.0;
  double implied_pi = 0.0;
};

RectificationResult rectified_quadrant(double base_distance);

/// 2 / (pi - 2), the base distance whose rectified quadrant is exactly pi / 2.
double exact_rectifier_distance();

}  // namespace circdiv

#endif  // CIRCDIV_RECTIFICATION_HPP
