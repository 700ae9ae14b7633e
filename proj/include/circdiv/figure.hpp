#ifndef CIRCDIV_FIGURE_HPP
#define CIRCDIV_FIGURE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circdiv/geometry.hpp"

namespace circdiv {

/// Result of evaluating a construction: named points, curves and measured
/// scalars. One namespace is shared by all three kinds and insertion order
/// is kept, which is the order renderers emit objects in.
class Figure {
 public:
  enum class Kind { point, curve, scalar };

  void add_point(const std::string& name, const Point& p);
  void add_curve(const std::string& name, const Curve& c);
  void add_scalar(const std::string& name, double value);

  std::optional<Kind> kind_of(const std::string& name) const;
  bool contains(const std::string& name) const { return kind_of(name).has_value(); }

  // Throw UnknownName for missing names and WrongKind for a name of another kind.
  const Point& point(const std::string& name) const;
  const Curve& curve(const std::string& name) const;
  double scalar(const std::string& name) const;

  const std::vector<std::pair<std::string, Kind>>& order() const { return order_; }
  std::size_t size() const { return order_.size(); }
  bool empty() const { return order_.empty(); }

  std::vector<std::pair<std::string, double>> scalars() const;

 private:
  void claim(const std::string& name, Kind kind);
  void require(const std::string& name, Kind kind) const;

  std::vector<std::pair<std::string, Kind>> order_;
  std::map<std::string, Point> points_;
  std::map<std::string, Curve> curves_;
  std::map<std::string, double> scalars_;
};

}  // namespace circdiv

#endif  // CIRCDIV_FIGURE_HPP
