#ifndef CIRCDIV_DSL_HPP
#define CIRCDIV_DSL_HPP

// A line-oriented language for straightedge-and-compass programs (`.euc`):
//
//   point NAME = ( NUM , NUM )
//   line NAME = NAME NAME
//   circle NAME = NAME NAME                 center, point on the circle
//   circle NAME = NAME radius NAME NAME     center, radius taken from a segment
//   intersect NAME [NAME] = NAME NAME [pick SELECTOR]
//   divide NAME = NAME NAME INT INT         from, to, parts, index
//   angle NAME = NAME NAME NAME             vertex, p, q
//
//   SELECTOR := first | second | upper | lower | left | right | near NAME | both
//   NUM      := [+|-] (decimal | pi | sqrt3)
//
// `#` starts a comment running to end of line; LF and CRLF are accepted.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "circdiv/figure.hpp"
#include "circdiv/geometry.hpp"

namespace circdiv::dsl {

/// A numeric literal. `pi` and `sqrt3` are kept symbolic so formatting
/// reproduces the token instead of 17 digits.
struct Number {
  enum class Kind { decimal, pi, sqrt3 };
  Kind kind = Kind::decimal;
  double value = 0.0;

  static Number decimal(double v) { return {Kind::decimal, v}; }
  static Number pi(bool negative = false);
  static Number sqrt3(bool negative = false);

  bool operator==(const Number&) const = default;
};

struct PointDef {
  std::string name;
  Number x, y;
  bool operator==(const PointDef&) const = default;
};

struct LineDef {
  std::string name, a, b;
  bool operator==(const LineDef&) const = default;
};

struct CircleDef {
  std::string name, center, through;
  bool operator==(const CircleDef&) const = default;
};

/// Compass with memory: radius is the length of segment rad_from..rad_to.
struct CircleRadDef {
  std::string name, center, rad_from, rad_to;
  bool operator==(const CircleRadDef&) const = default;
};

struct Selector {
  enum class Kind { first, second, upper, lower, left, right, near, both };
  Kind kind = Kind::first;
  std::string near;  // only for Kind::near
  bool operator==(const Selector&) const = default;
};

/// One name with any selector but `both`, or two names with `both`.
struct IntersectDef {
  std::vector<std::string> names;
  std::string a, b;
  Selector pick;
  bool operator==(const IntersectDef&) const = default;
};

struct DivideDef {
  std::string name, from, to;
  long n = 1, k = 0;
  bool operator==(const DivideDef&) const = default;
};

struct AngleDef {
  std::string name, vertex, p, q;
  bool operator==(const AngleDef&) const = default;
};

using Statement =
    std::variant<PointDef, LineDef, CircleDef, CircleRadDef, IntersectDef, DivideDef, AngleDef>;

struct Program {
  std::vector<Statement> statements;
  bool operator==(const Program&) const = default;
};

/// Throws ParseError positioned at the first offending token. Name resolution
/// is left to evaluate().
Program parse(std::string_view text);

/// Canonical text, one statement per line, each terminated by LF.
std::string format(const Program& program);
std::string format(const Statement& statement);
std::string format(const Number& number);

/// Runs the statements in order against the geometry kernel.
Figure evaluate(const Program& program, const Tolerance<double>& tol = {});

bool is_keyword(std::string_view word);

}  // namespace circdiv::dsl

#endif  // CIRCDIV_DSL_HPP
