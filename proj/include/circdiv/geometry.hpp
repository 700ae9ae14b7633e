#ifndef CIRCDIV_GEOMETRY_HPP
#define CIRCDIV_GEOMETRY_HPP

// Straightedge-and-compass kernel: points, lines, circles and the handful of
// operations a construction needs. Everything is templated on the scalar type
// and works on Eigen fixed-size vectors; `double` is the instantiation used by
// the rest of the library. All lengths are in units of the governing circle's
// radius.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "circdiv/errors.hpp"

namespace circdiv {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

using Point = Point2<double>;

/// Coincidence threshold `geom` decides tangency, parallelism and degenerate
/// inputs; `test` is the looser threshold used when asserting results.
template <typename Scalar>
struct Tolerance {
  Scalar geom = Scalar(1e-9);
  Scalar test = Scalar(1e-7);

  void validate() const {
    if (!(Scalar(0) < geom && geom < test && test < Scalar(1))) {
      throw DomainError("tolerance must satisfy 0 < geom < test < 1");
    }
  }
};

template <typename Scalar>
Point2<Scalar> make_point(Scalar x, Scalar y) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw DomainError("point coordinates must be finite");
  }
  return Point2<Scalar>(x, y);
}

template <typename Scalar>
struct Line {
  Point2<Scalar> p;
  Point2<Scalar> q;
};

template <typename Scalar>
struct Circle {
  Point2<Scalar> center;
  Scalar radius;
};

template <typename Scalar>
using Curve2 = std::variant<Line<Scalar>, Circle<Scalar>>;

using Curve = Curve2<double>;

template <typename Scalar>
Line<Scalar> make_line(const Point2<Scalar>& p, const Point2<Scalar>& q,
                       const Tolerance<Scalar>& tol = {}) {
  if (!p.allFinite() || !q.allFinite()) throw DomainError("line anchors must be finite");
  if ((q - p).norm() <= tol.geom) throw DegenerateCurve("line anchors coincide");
  return {p, q};
}

template <typename Scalar>
Circle<Scalar> make_circle(const Point2<Scalar>& center, Scalar radius,
                           const Tolerance<Scalar>& tol = {}) {
  if (!center.allFinite() || !std::isfinite(radius)) {
    throw DomainError("circle must have finite center and radius");
  }
  if (radius <= tol.geom) throw DegenerateCurve("circle radius is not positive");
  return {center, radius};
}

template <typename Scalar>
Scalar cross(const Point2<Scalar>& a, const Point2<Scalar>& b) {
  return a.x() * b.y() - a.y() * b.x();
}

template <typename Scalar>
Scalar distance(const Point2<Scalar>& p, const Point2<Scalar>& q) {
  return std::hypot(q.x() - p.x(), q.y() - p.y());
}

/// Distance from `pt` to the curve: perpendicular distance for lines,
/// |dist-to-center - radius| for circles.
template <typename Scalar>
Scalar distance_to(const Curve2<Scalar>& curve, const Point2<Scalar>& pt) {
  if (const auto* line = std::get_if<Line<Scalar>>(&curve)) {
    const Point2<Scalar> dir = line->q - line->p;
    return std::abs(cross<Scalar>(dir, pt - line->p)) / dir.norm();
  }
  const auto& circle = std::get<Circle<Scalar>>(curve);
  return std::abs(distance<Scalar>(circle.center, pt) - circle.radius);
}

/// Lexicographic (x, then y) order with coordinates equal when within `eps`.
template <typename Scalar>
bool lex_less(const Point2<Scalar>& a, const Point2<Scalar>& b, Scalar eps) {
  if (std::abs(a.x() - b.x()) > eps) return a.x() < b.x();
  if (std::abs(a.y() - b.y()) > eps) return a.y() < b.y();
  return false;
}

namespace detail {

// Points at distance sqrt(disc) either side of `foot` along unit `dir`.
template <typename Scalar>
std::vector<Point2<Scalar>> chord(const Point2<Scalar>& foot, const Point2<Scalar>& dir,
                                  Scalar disc, Scalar eps) {
  if (disc <= -eps) return {};
  if (disc < eps) return {foot};
  const Scalar half = std::sqrt(disc);
  Point2<Scalar> a = foot - half * dir;
  Point2<Scalar> b = foot + half * dir;
  if (lex_less(b, a, eps)) std::swap(a, b);
  return {a, b};
}

template <typename Scalar>
std::vector<Point2<Scalar>> intersect_lines(const Line<Scalar>& a, const Line<Scalar>& b,
                                            Scalar eps) {
  const Point2<Scalar> da = a.q - a.p;
  const Point2<Scalar> db = b.q - b.p;
  const Scalar denom = cross<Scalar>(da, db);
  if (std::abs(denom) <= eps * da.norm() * db.norm()) {
    if (std::abs(cross<Scalar>(da, b.p - a.p)) / da.norm() <= eps) {
      throw CoincidentCurves("lines coincide");
    }
    return {};
  }
  const Scalar t = cross<Scalar>(b.p - a.p, db) / denom;
  return {a.p + t * da};
}

template <typename Scalar>
std::vector<Point2<Scalar>> intersect_line_circle(const Line<Scalar>& line,
                                                  const Circle<Scalar>& circle, Scalar eps) {
  const Point2<Scalar> dir = (line.q - line.p).normalized();
  const Point2<Scalar> rel = circle.center - line.p;
  const Point2<Scalar> foot = line.p + rel.dot(dir) * dir;
  const Scalar h = std::abs(cross<Scalar>(dir, rel));
  return chord<Scalar>(foot, dir, (circle.radius - h) * (circle.radius + h), eps);
}

// Reduced to the radical line of the pair, then intersected with `c1`.
template <typename Scalar>
std::vector<Point2<Scalar>> intersect_circles(const Circle<Scalar>& c1, const Circle<Scalar>& c2,
                                              Scalar eps) {
  const Point2<Scalar> d = c2.center - c1.center;
  const Scalar dist = d.norm();
  if (dist <= eps) {
    if (std::abs(c1.radius - c2.radius) <= eps) throw CoincidentCurves("circles coincide");
    return {};
  }
  const Point2<Scalar> e = d / dist;
  const Scalar along = (dist * dist + c1.radius * c1.radius - c2.radius * c2.radius) / (2 * dist);
  const Point2<Scalar> foot = c1.center + along * e;
  const Point2<Scalar> dir(-e.y(), e.x());
  return chord<Scalar>(foot, dir, (c1.radius - along) * (c1.radius + along), eps);
}

template <typename Scalar>
auto key(const Line<Scalar>& l) {
  return std::make_tuple(l.p.x(), l.p.y(), l.q.x(), l.q.y());
}

template <typename Scalar>
auto key(const Circle<Scalar>& c) {
  return std::make_tuple(c.center.x(), c.center.y(), c.radius);
}

}  // namespace detail

/// Intersection points of two curves, sorted ascending by (x, y).
///
/// A tangency (discriminant within `tol.geom` of zero) yields exactly one
/// point. Same-kind pairs are put in a canonical order before computing, so
/// the result is bit-identical under swapping the arguments.
template <typename Scalar>
std::vector<Point2<Scalar>> intersect(const Curve2<Scalar>& a, const Curve2<Scalar>& b,
                                      const Tolerance<Scalar>& tol = {}) {
  const Scalar eps = tol.geom;
  return std::visit(
      [eps](const auto& x, const auto& y) -> std::vector<Point2<Scalar>> {
        using X = std::decay_t<decltype(x)>;
        using Y = std::decay_t<decltype(y)>;
        if constexpr (std::is_same_v<X, Line<Scalar>> && std::is_same_v<Y, Line<Scalar>>) {
          return detail::key(y) < detail::key(x) ? detail::intersect_lines(y, x, eps)
                                                 : detail::intersect_lines(x, y, eps);
        } else if constexpr (std::is_same_v<X, Circle<Scalar>> &&
                             std::is_same_v<Y, Circle<Scalar>>) {
          return detail::key(y) < detail::key(x) ? detail::intersect_circles(y, x, eps)
                                                 : detail::intersect_circles(x, y, eps);
        } else if constexpr (std::is_same_v<X, Line<Scalar>>) {
          return detail::intersect_line_circle(x, y, eps);
        } else {
          return detail::intersect_line_circle(y, x, eps);
        }
      },
      a, b);
}

/// Unsigned angle at `vertex` between the rays towards `p` and `q`, in [0, pi].
///
/// Uses atan2(|cross|, dot) rather than acos of a normalised dot product; the
/// latter loses about half the available digits near 0 and pi.
template <typename Scalar>
Scalar angle(const Point2<Scalar>& vertex, const Point2<Scalar>& p, const Point2<Scalar>& q,
             const Tolerance<Scalar>& tol = {}) {
  const Point2<Scalar> u = p - vertex;
  const Point2<Scalar> w = q - vertex;
  if (u.norm() <= tol.geom || w.norm() <= tol.geom) {
    throw DegenerateAngle("angle arm coincides with its vertex");
  }
  return std::atan2(std::abs(cross<Scalar>(u, w)), u.dot(w));
}

/// The k-th of the n+1 equally spaced points from p to q; k = 0 gives p and
/// k = n gives q exactly.
template <typename Scalar>
Point2<Scalar> divide_segment(const Point2<Scalar>& p, const Point2<Scalar>& q, long n, long k,
                              const Tolerance<Scalar>& tol = {}) {
  if (n < 1) throw BadIndex("segment must be divided into at least one part");
  if (k < 0 || k > n) {
    throw BadIndex("division index " + std::to_string(k) + " outside [0, " + std::to_string(n) +
                   "]");
  }
  if ((q - p).norm() <= tol.geom) throw DegenerateCurve("segment endpoints coincide");
  const Scalar t = Scalar(k) / Scalar(n);
  return Point2<Scalar>(std::lerp(p.x(), q.x(), t), std::lerp(p.y(), q.y(), t));
}

/// Counterclockwise rotation of `p` about `center` by `theta` radians.
template <typename Scalar>
Point2<Scalar> rotate(const Point2<Scalar>& p, const Point2<Scalar>& center, Scalar theta) {
  if (!std::isfinite(theta)) throw DomainError("rotation angle must be finite");
  // c + (p - c) need not round back to p
  if (theta == Scalar(0)) return p;
  return center + Eigen::Rotation2D<Scalar>(theta) * (p - center);
}

}  // namespace circdiv

#endif  // CIRCDIV_GEOMETRY_HPP
