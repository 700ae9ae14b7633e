#include <cmath>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "circdiv/dsl.hpp"
#include "circdiv/errors.hpp"

namespace circdiv::dsl {

namespace {

// Index into the kernel's (x, y)-ascending list. Ties keep the earlier point.
std::size_t select(const std::vector<Point>& pts, const Selector& sel, const Figure& fig,
                   double eps) {
  auto best = [&](auto better) {
    std::size_t idx = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (better(pts[i], pts[idx])) idx = i;
    }
    return idx;
  };
  switch (sel.kind) {
    case Selector::Kind::first:
    case Selector::Kind::both:
      return 0;
    case Selector::Kind::second:
      if (pts.size() < 2) throw SelectorEmpty("selector 'second' needs two intersection points");
      return 1;
    case Selector::Kind::upper:
      return best([eps](const Point& a, const Point& b) { return a.y() > b.y() + eps; });
    case Selector::Kind::lower:
      return best([eps](const Point& a, const Point& b) { return a.y() < b.y() - eps; });
    case Selector::Kind::left:
      return best([eps](const Point& a, const Point& b) { return a.x() < b.x() - eps; });
    case Selector::Kind::right:
      return best([eps](const Point& a, const Point& b) { return a.x() > b.x() + eps; });
    case Selector::Kind::near: {
      const Point& ref = fig.point(sel.near);
      return best([&](const Point& a, const Point& b) {
        return distance(a, ref) < distance(b, ref) - eps;
      });
    }
  }
  return 0;
}

class Evaluator {
 public:
  explicit Evaluator(const Tolerance<double>& tol) : tol_(tol) {}

  void operator()(const PointDef& d) {
    fig_.add_point(d.name, make_point(d.x.value, d.y.value));
  }

  void operator()(const LineDef& d) {
    const Point& a = fig_.point(d.a);
    const Point& b = fig_.point(d.b);
    fig_.add_curve(d.name, make_line(a, b, tol_));
  }

  void operator()(const CircleDef& d) {
    const Point& c = fig_.point(d.center);
    const Point& through = fig_.point(d.through);
    fig_.add_curve(d.name, make_circle(c, distance(c, through), tol_));
  }

  void operator()(const CircleRadDef& d) {
    const Point& c = fig_.point(d.center);
    const Point& from = fig_.point(d.rad_from);
    const Point& to = fig_.point(d.rad_to);
    fig_.add_curve(d.name, make_circle(c, distance(from, to), tol_));
  }

  void operator()(const IntersectDef& d) {
    for (const auto& n : d.names) {
      if (fig_.contains(n)) throw DuplicateName("name '" + n + "' is already defined");
    }
    const Curve& a = fig_.curve(d.a);
    const Curve& b = fig_.curve(d.b);
    const auto pts = intersect(a, b, tol_);
    if (pts.empty()) {
      throw SelectorEmpty("'" + d.a + "' and '" + d.b + "' do not intersect");
    }
    if (d.pick.kind == Selector::Kind::both) {
      if (pts.size() != 2 || d.names.size() != 2) {
        throw SelectorEmpty("'" + d.a + "' and '" + d.b + "' meet in " +
                            std::to_string(pts.size()) + " point(s), " +
                            std::to_string(d.names.size()) + " name(s) given");
      }
      fig_.add_point(d.names[0], pts[0]);
      fig_.add_point(d.names[1], pts[1]);
      return;
    }
    fig_.add_point(d.names.front(), pts[select(pts, d.pick, fig_, tol_.geom)]);
  }

  void operator()(const DivideDef& d) {
    const Point& from = fig_.point(d.from);
    const Point& to = fig_.point(d.to);
    fig_.add_point(d.name, divide_segment(from, to, d.n, d.k, tol_));
  }

  void operator()(const AngleDef& d) {
    const Point& vertex = fig_.point(d.vertex);
    const Point& p = fig_.point(d.p);
    const Point& q = fig_.point(d.q);
    fig_.add_scalar(d.name, angle(vertex, p, q, tol_));
  }

  Figure take() { return std::move(fig_); }

 private:
  Tolerance<double> tol_;
  Figure fig_;
};

}  // namespace

Figure evaluate(const Program& program, const Tolerance<double>& tol) {
  tol.validate();
  Evaluator ev(tol);
  for (const auto& st : program.statements) std::visit(ev, st);
  return ev.take();
}

}  // namespace circdiv::dsl
