#include <string>
#include <variant>

#include "circdiv/dsl.hpp"
#include "circdiv/numfmt.hpp"

namespace circdiv::dsl {

namespace {

std::string selector_text(const Selector& s) {
  switch (s.kind) {
    case Selector::Kind::first:
      return "first";
    case Selector::Kind::second:
      return "second";
    case Selector::Kind::upper:
      return "upper";
    case Selector::Kind::lower:
      return "lower";
    case Selector::Kind::left:
      return "left";
    case Selector::Kind::right:
      return "right";
    case Selector::Kind::near:
      return "near " + s.near;
    case Selector::Kind::both:
      return "both";
  }
  return {};
}

struct StatementFormatter {
  std::string operator()(const PointDef& d) const {
    return "point " + d.name + " = (" + format(d.x) + ", " + format(d.y) + ")";
  }
  std::string operator()(const LineDef& d) const {
    return "line " + d.name + " = " + d.a + " " + d.b;
  }
  std::string operator()(const CircleDef& d) const {
    return "circle " + d.name + " = " + d.center + " " + d.through;
  }
  std::string operator()(const CircleRadDef& d) const {
    return "circle " + d.name + " = " + d.center + " radius " + d.rad_from + " " + d.rad_to;
  }
  std::string operator()(const IntersectDef& d) const {
    std::string out = "intersect";
    for (const auto& n : d.names) out += " " + n;
    out += " = " + d.a + " " + d.b;
    // `both` is implied by two names
    if (d.pick.kind != Selector::Kind::both) out += " pick " + selector_text(d.pick);
    return out;
  }
  std::string operator()(const DivideDef& d) const {
    return "divide " + d.name + " = " + d.from + " " + d.to + " " + std::to_string(d.n) + " " +
           std::to_string(d.k);
  }
  std::string operator()(const AngleDef& d) const {
    return "angle " + d.name + " = " + d.vertex + " " + d.p + " " + d.q;
  }
};

}  // namespace

std::string format(const Number& number) {
  const std::string sign = number.value < 0 ? "-" : "";
  switch (number.kind) {
    case Number::Kind::pi:
      return sign + "pi";
    case Number::Kind::sqrt3:
      return sign + "sqrt3";
    case Number::Kind::decimal:
      break;
  }
  return format_g17(number.value);
}

std::string format(const Statement& statement) {
  return std::visit(StatementFormatter{}, statement);
}

std::string format(const Program& program) {
  std::string out;
  for (const auto& st : program.statements) {
    out += format(st);
    out += '\n';
  }
  return out;
}

}  // namespace circdiv::dsl
