#ifndef CIRCDIV_METHODS_HPP
#define CIRCDIV_METHODS_HPP

// Bion and Tempier approximate circle division.
//
// Both methods draw a ray from the vesica point V = (0, -sqrt3) through a
// point on the horizontal diameter of the unit circle and read an angle off
// where the ray meets the circle. With a = |C F| (center to the diameter
// point), b = |C V|, c = |V F| and d the radius, the Bion angle x at the
// left endpoint and the Tempier angle y at the top of the vertical diameter
// are
//
//   x = asin(b / c) - asin(a b / (c d))
//   y = acos(-a / c) - acos(a b / (c d))
//
// Bion uses the second of n division points from the left, a = (n - 4) / n;
// Tempier uses the point 4 / n left of the center.

#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circdiv/dsl.hpp"
#include "circdiv/geometry.hpp"

namespace circdiv {

enum class Method { bion, tempier };

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view name);

/// Right triangle C-V-F plus the circle radius d.
struct AngleConfig {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;

  /// Throws DomainError unless c^2 = a^2 + b^2 within `tol.test` and both
  /// inverse-trig arguments lie in range.
  void validate(const Tolerance<double>& tol = {}) const;
};

double angle_x(const AngleConfig& cfg, const Tolerance<double>& tol = {});
double angle_y(const AngleConfig& cfg, const Tolerance<double>& tol = {});

AngleConfig bion_config(long n);
AngleConfig tempier_config(long n, double base = std::numbers::sqrt3);

double bion_angle(long n);
/// `base` moves V along the vertical diameter; sqrt3 is the vesica point.
double tempier_angle(long n, double base = std::numbers::sqrt3);
double method_angle(Method m, long n);

dsl::Program bion_program(long n);
dsl::Program tempier_program(long n);
dsl::Program construction_program(Method m, long n);

struct PolygonResult {
  std::vector<Point> vertices;
  double step_angle = 0.0;
  double closure_gap = 0.0;  // n * step_angle - 2 pi
};

/// Vertices stepped counterclockwise around the unit circle from (-1, 0).
PolygonResult polygon(Method m, long n);

struct ErrorRow {
  long n = 0;
  double exact = 0.0;
  double approx = 0.0;
  double error = 0.0;      // exact - approx
  double rel_error = 0.0;  // |error| / exact
};

std::vector<ErrorRow> error_table(Method m, long from, long to);

/// 1 - n * angle / (2 pi); positive when the method undershoots.
double signed_relative_error(Method m, long n);
double relative_error_limit(Method m);

enum class Verdict { bion, tempier, tie };

std::string_view to_string(Verdict v);

/// Tie when the two |relative errors| agree within 1e-4.
Verdict best_method(long n);

}  // namespace circdiv

#endif  // CIRCDIV_METHODS_HPP
