#ifndef CIRCDIV_SVG_HPP
#define CIRCDIV_SVG_HPP

#include <string>

#include "circdiv/figure.hpp"
#include "circdiv/methods.hpp"

namespace circdiv {

struct RenderOptions {
  int width_px = 640;
  double margin = 0.08;  // fraction of width on every side
  double stroke_width = 1.5;
  bool label_points = true;
  int decimals = 2;

  void validate() const;
};

/// SVG 1.1 document for a figure, y axis pointing up. Circles become
/// <circle> elements, lines are clipped to the viewport, points are square
/// <rect> markers. Objects follow figure insertion order and every number is
/// printed with exactly `decimals` fraction digits, so output is
/// byte-deterministic.
std::string render_svg(const Figure& fig, const RenderOptions& opts = {});

/// The approximate n-gon on the unit circle, including the vertex reached
/// after n steps so the closure gap is visible, with the gap annotated.
std::string render_polygon_svg(const PolygonResult& poly, Method m, const RenderOptions& opts = {});

}  // namespace circdiv

#endif  // CIRCDIV_SVG_HPP
