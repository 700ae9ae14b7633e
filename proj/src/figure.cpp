#include "circdiv/figure.hpp"

namespace circdiv {

namespace {

const char* kind_name(Figure::Kind k) {
  switch (k) {
    case Figure::Kind::point:
      return "point";
    case Figure::Kind::curve:
      return "curve";
    case Figure::Kind::scalar:
      return "scalar";
  }
  return "?";
}

}  // namespace

void Figure::claim(const std::string& name, Kind kind) {
  if (contains(name)) throw DuplicateName("name '" + name + "' is already defined");
  order_.emplace_back(name, kind);
}

void Figure::require(const std::string& name, Kind kind) const {
  const auto actual = kind_of(name);
  if (!actual) throw UnknownName("unknown name '" + name + "'");
  if (*actual != kind) {
    throw WrongKind("'" + name + "' is a " + kind_name(*actual) + ", expected a " +
                    kind_name(kind));
  }
}

void Figure::add_point(const std::string& name, const Point& p) {
  if (!p.allFinite()) throw DomainError("point '" + name + "' is not finite");
  claim(name, Kind::point);
  points_.emplace(name, p);
}

void Figure::add_curve(const std::string& name, const Curve& c) {
  claim(name, Kind::curve);
  curves_.emplace(name, c);
}

void Figure::add_scalar(const std::string& name, double value) {
  if (!std::isfinite(value)) throw DomainError("scalar '" + name + "' is not finite");
  claim(name, Kind::scalar);
  scalars_.emplace(name, value);
}

std::optional<Figure::Kind> Figure::kind_of(const std::string& name) const {
  if (points_.count(name)) return Kind::point;
  if (curves_.count(name)) return Kind::curve;
  if (scalars_.count(name)) return Kind::scalar;
  return std::nullopt;
}

const Point& Figure::point(const std::string& name) const {
  require(name, Kind::point);
  return points_.at(name);
}

const Curve& Figure::curve(const std::string& name) const {
  require(name, Kind::curve);
  return curves_.at(name);
}

double Figure::scalar(const std::string& name) const {
  require(name, Kind::scalar);
  return scalars_.at(name);
}

std::vector<std::pair<std::string, double>> Figure::scalars() const {
  std::vector<std::pair<std::string, double>> out;
  for (const auto& [name, kind] : order_) {
    if (kind == Kind::scalar) out.emplace_back(name, scalars_.at(name));
  }
  return out;
}

}  // namespace circdiv
