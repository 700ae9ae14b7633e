#include "circdiv/methods.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "circdiv/errors.hpp"

namespace circdiv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt3 = std::numbers::sqrt3;

void require_n(long n) {
  if (n < 4) {
    throw UnsupportedN("n must be at least 4, got " + std::to_string(n));
  }
}

// Inverse-trig argument, clamped to [-1, 1] once it is known to be in range.
double unit_arg(double v, double eps, const char* what) {
  if (!std::isfinite(v) || std::abs(v) > 1.0 + eps) {
    throw DomainError(std::string(what) + " = " + std::to_string(v) + " is outside [-1, 1]");
  }
  return std::clamp(v, -1.0, 1.0);
}

}  // namespace

std::string_view to_string(Method m) { return m == Method::bion ? "bion" : "tempier"; }

std::optional<Method> parse_method(std::string_view name) {
  if (name == "bion") return Method::bion;
  if (name == "tempier") return Method::tempier;
  return std::nullopt;
}

void AngleConfig::validate(const Tolerance<double>& tol) const {
  if (!(a >= 0.0) || !(b > 0.0) || !(c > 0.0) || !(d > 0.0) || !std::isfinite(a) ||
      !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d)) {
    throw DomainError("angle configuration needs a >= 0 and b, c, d > 0");
  }
  if (std::abs(c * c - (a * a + b * b)) > tol.test) {
    throw DomainError("angle configuration is not a right triangle at the center");
  }
  unit_arg(b / c, tol.geom, "b/c");
  unit_arg(a * b / (c * d), tol.geom, "ab/(cd)");
}

double angle_x(const AngleConfig& cfg, const Tolerance<double>& tol) {
  cfg.validate(tol);
  return std::asin(unit_arg(cfg.b / cfg.c, tol.geom, "b/c")) -
         std::asin(unit_arg(cfg.a * cfg.b / (cfg.c * cfg.d), tol.geom, "ab/(cd)"));
}

double angle_y(const AngleConfig& cfg, const Tolerance<double>& tol) {
  cfg.validate(tol);
  return std::acos(unit_arg(-cfg.a / cfg.c, tol.geom, "-a/c")) -
         std::acos(unit_arg(cfg.a * cfg.b / (cfg.c * cfg.d), tol.geom, "ab/(cd)"));
}

AngleConfig bion_config(long n) {
  require_n(n);
  const double nd = static_cast<double>(n);
  return {(nd - 4.0) / nd, kSqrt3, 2.0 * std::sqrt(nd * nd - 2.0 * nd + 4.0) / nd, 1.0};
}

AngleConfig tempier_config(long n, double base) {
  require_n(n);
  if (!(base > 0.0) || !std::isfinite(base)) throw DomainError("base distance must be positive");
  const double a = 4.0 / static_cast<double>(n);
  return {a, base, std::hypot(a, base), 1.0};
}

double bion_angle(long n) {
  require_n(n);
  const double nd = static_cast<double>(n);
  const double s = 2.0 * std::sqrt(nd * nd - 2.0 * nd + 4.0);
  return std::asin(kSqrt3 * nd / s) - std::asin(kSqrt3 * (nd - 4.0) / s);
}

double tempier_angle(long n, double base) {
  require_n(n);
  if (!(base > 0.0) || !std::isfinite(base)) throw DomainError("base distance must be positive");
  const double nd = static_cast<double>(n);
  const double s = std::sqrt(base * base * nd * nd + 16.0);
  const double eps = Tolerance<double>{}.geom;
  return std::acos(unit_arg(-4.0 / s, eps, "-a/c")) -
         std::acos(unit_arg(4.0 * base / s, eps, "ab/(cd)"));
}

double method_angle(Method m, long n) {
  return m == Method::bion ? bion_angle(n) : tempier_angle(n);
}

namespace {

// Unit circle about C, diameter B B', vesica point V below the diameter.
dsl::Program canonical_frame() {
  using namespace dsl;
  Program p;
  p.statements = {
      PointDef{"C", Number::decimal(0), Number::decimal(0)},
      PointDef{"B", Number::decimal(-1), Number::decimal(0)},
      PointDef{"B'", Number::decimal(1), Number::decimal(0)},
      CircleDef{"main", "C", "B"},
      CircleDef{"arcB", "B", "B'"},
      CircleDef{"arcB'", "B'", "B"},
      IntersectDef{{"V"}, "arcB", "arcB'", {Selector::Kind::lower, {}}},
  };
  return p;
}

}  // namespace

dsl::Program bion_program(long n) {
  using namespace dsl;
  require_n(n);
  Program p = canonical_frame();
  p.statements.insert(p.statements.end(),
                      {
                          DivideDef{"F", "B", "B'", n, 2},
                          LineDef{"ray", "V", "F"},
                          IntersectDef{{"G"}, "ray", "main", {Selector::Kind::upper, {}}},
                          AngleDef{"theta", "C", "B", "G"},
                      });
  return p;
}

dsl::Program tempier_program(long n) {
  using namespace dsl;
  require_n(n);
  Program p = canonical_frame();
  // T sits 4/n left of C: the (n - 4)-th of 2n parts of the diameter.
  p.statements.insert(p.statements.end(),
                      {
                          PointDef{"D", Number::decimal(0), Number::decimal(1)},
                          DivideDef{"T", "B", "B'", 2 * n, n - 4},
                          LineDef{"ray", "V", "T"},
                          IntersectDef{{"G"}, "ray", "main", {Selector::Kind::upper, {}}},
                          AngleDef{"theta", "C", "D", "G"},
                      });
  return p;
}

dsl::Program construction_program(Method m, long n) {
  return m == Method::bion ? bion_program(n) : tempier_program(n);
}

PolygonResult polygon(Method m, long n) {
  const double step = method_angle(m, n);
  const Point center(0.0, 0.0);
  const Point start(-1.0, 0.0);
  PolygonResult out;
  out.step_angle = step;
  out.closure_gap = static_cast<double>(n) * step - 2.0 * kPi;
  out.vertices.reserve(static_cast<std::size_t>(n));
  for (long k = 0; k < n; ++k) {
    out.vertices.push_back(rotate(start, center, static_cast<double>(k) * step));
  }
  return out;
}

std::vector<ErrorRow> error_table(Method m, long from, long to) {
  require_n(from);
  if (to < from) throw DomainError("table range is empty");
  std::vector<ErrorRow> rows;
  rows.reserve(static_cast<std::size_t>(to - from + 1));
  for (long n = from; n <= to; ++n) {
    ErrorRow row;
    row.n = n;
    row.exact = 2.0 * kPi / static_cast<double>(n);
    row.approx = method_angle(m, n);
    row.error = row.exact - row.approx;
    row.rel_error = std::abs(row.error) / row.exact;
    rows.push_back(row);
  }
  return rows;
}

double signed_relative_error(Method m, long n) {
  return 1.0 - static_cast<double>(n) * method_angle(m, n) / (2.0 * kPi);
}

double relative_error_limit(Method m) {
  if (m == Method::bion) return 1.0 - 2.0 * kSqrt3 / kPi;
  return -(6.0 + 2.0 * kSqrt3 - 3.0 * kPi) / (3.0 * kPi);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::bion:
      return "bion";
    case Verdict::tempier:
      return "tempier";
    case Verdict::tie:
      return "tie";
  }
  return {};
}

Verdict best_method(long n) {
  const double bion = std::abs(signed_relative_error(Method::bion, n));
  const double tempier = std::abs(signed_relative_error(Method::tempier, n));
  if (std::abs(bion - tempier) < 1e-4) return Verdict::tie;
  return bion < tempier ? Verdict::bion : Verdict::tempier;
}

}  // namespace circdiv
