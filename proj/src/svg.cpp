#include "circdiv/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circdiv/errors.hpp"
#include "circdiv/numfmt.hpp"

namespace circdiv {

void RenderOptions::validate() const {
  if (width_px <= 0) throw DomainError("width must be positive");
  if (!(margin >= 0.0 && margin <= 0.4)) throw DomainError("margin must be in [0, 0.4]");
  if (!(stroke_width > 0.0) || !std::isfinite(stroke_width)) {
    throw DomainError("stroke width must be positive");
  }
  if (decimals < 0 || decimals > 15) throw DomainError("decimals must be in [0, 15]");
}

namespace {

struct Box {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void add(const Point& p) {
    min_x = std::min(min_x, p.x());
    min_y = std::min(min_y, p.y());
    max_x = std::max(max_x, p.x());
    max_y = std::max(max_y, p.y());
  }
  void add(const Point& c, double r) {
    add(Point(c.x() - r, c.y() - r));
    add(Point(c.x() + r, c.y() + r));
  }
  bool valid() const { return min_x <= max_x; }
};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

// World-to-pixel mapping plus the element writer.
class Canvas {
 public:
  Canvas(Box box, const RenderOptions& opts) : opts_(opts) {
    if (!box.valid()) box.add(Point(0, 0));
    double w = box.max_x - box.min_x;
    double h = box.max_y - box.min_y;
    constexpr double kTiny = 1e-9;
    if (w < kTiny && h < kTiny) {
      w = h = 2.0;
    } else if (w < kTiny) {
      w = h;
    } else if (h < kTiny) {
      h = w;
    }
    const double cx = 0.5 * (box.min_x + box.max_x);
    const double cy = 0.5 * (box.min_y + box.max_y);
    min_x_ = cx - 0.5 * w;
    max_y_ = cy + 0.5 * h;
    margin_px_ = opts.margin * opts.width_px;
    scale_ = (opts.width_px - 2.0 * margin_px_) / w;
    if (!(scale_ > 0.0)) scale_ = opts.width_px / w;
    width_px_ = opts.width_px;
    height_px_ = std::max(1L, std::lround(h * scale_ + 2.0 * margin_px_));

    body_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    body_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
             std::to_string(width_px_) + "\" height=\"" + std::to_string(height_px_) +
             "\" viewBox=\"0 0 " + std::to_string(width_px_) + " " +
             std::to_string(height_px_) + "\">\n";
    body_ += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    body_ += "<g fill=\"none\" stroke=\"black\" stroke-width=\"" + num(opts.stroke_width) +
             "\">\n";
  }

  std::string num(double v) const { return format_fixed(v, opts_.decimals); }
  double px(double x) const { return margin_px_ + (x - min_x_) * scale_; }
  double py(double y) const { return margin_px_ + (max_y_ - y) * scale_; }

  void circle(const Circle<double>& c, const std::string& id) {
    body_ += "<circle id=\"" + escape(id) + "\" cx=\"" + num(px(c.center.x())) + "\" cy=\"" +
             num(py(c.center.y())) + "\" r=\"" + num(c.radius * scale_) + "\"/>\n";
  }

  void line(const Line<double>& l, const std::string& id) {
    const auto seg = clip(l);
    if (!seg) return;
    body_ += "<line id=\"" + escape(id) + "\" x1=\"" + num(px(seg->first.x())) + "\" y1=\"" +
             num(py(seg->first.y())) + "\" x2=\"" + num(px(seg->second.x())) + "\" y2=\"" +
             num(py(seg->second.y())) + "\"/>\n";
  }

  void polyline(const std::vector<Point>& pts, const std::string& id) {
    body_ += "<polyline id=\"" + escape(id) + "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) body_ += ' ';
      body_ += num(px(pts[i].x())) + "," + num(py(pts[i].y()));
    }
    body_ += "\"/>\n";
  }

  void marker(const Point& p, const std::string& name) {
    const double side = 3.0 * opts_.stroke_width;
    body_ += "<rect class=\"point\" id=\"" + escape(name) + "\" x=\"" +
             num(px(p.x()) - 0.5 * side) + "\" y=\"" + num(py(p.y()) - 0.5 * side) +
             "\" width=\"" + num(side) + "\" height=\"" + num(side) +
             "\" fill=\"black\" stroke=\"none\"/>\n";
    if (opts_.label_points) {
      labels_.push_back("<text x=\"" + num(px(p.x()) + 2.0 * side) + "\" y=\"" +
                        num(py(p.y()) - 2.0 * side) + "\">" + escape(name) + "</text>\n");
    }
  }

  void caption(const std::string& text) { captions_.push_back(text); }

  std::string finish() {
    body_ += "</g>\n";
    const double font = std::max(8.0, 0.025 * width_px_);
    if (!labels_.empty() || !captions_.empty()) {
      body_ += "<g font-family=\"sans-serif\" font-size=\"" + num(font) + "\" fill=\"black\">\n";
      for (const auto& l : labels_) body_ += l;
      for (std::size_t i = 0; i < captions_.size(); ++i) {
        body_ += "<text class=\"caption\" x=\"" + num(0.5 * font) + "\" y=\"" +
                 num(1.2 * font * static_cast<double>(i + 1)) + "\">" + escape(captions_[i]) +
                 "</text>\n";
      }
      body_ += "</g>\n";
    }
    body_ += "</svg>\n";
    return std::move(body_);
  }

 private:
  // Liang-Barsky against the whole viewport, in world coordinates.
  std::optional<std::pair<Point, Point>> clip(const Line<double>& l) const {
    const double x0 = min_x_ - margin_px_ / scale_;
    const double x1 = min_x_ + (width_px_ - margin_px_) / scale_;
    const double y1 = max_y_ + margin_px_ / scale_;
    const double y0 = max_y_ - (height_px_ - margin_px_) / scale_;
    const Point d = l.q - l.p;
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    auto edge = [&](double denom, double num) {
      if (denom == 0.0) return num >= 0.0;
      const double t = num / denom;
      if (denom > 0.0) {
        hi = std::min(hi, t);
      } else {
        lo = std::max(lo, t);
      }
      return true;
    };
    if (!edge(-d.x(), l.p.x() - x0) || !edge(d.x(), x1 - l.p.x()) ||
        !edge(-d.y(), l.p.y() - y0) || !edge(d.y(), y1 - l.p.y()) || lo > hi) {
      return std::nullopt;
    }
    return std::make_pair(Point(l.p + lo * d), Point(l.p + hi * d));
  }

  RenderOptions opts_;
  double min_x_ = 0.0;
  double max_y_ = 0.0;
  double margin_px_ = 0.0;
  double scale_ = 1.0;
  long width_px_ = 0;
  long height_px_ = 0;
  std::string body_;
  std::vector<std::string> labels_;
  std::vector<std::string> captions_;
};

}  // namespace

std::string render_svg(const Figure& fig, const RenderOptions& opts) {
  opts.validate();
  if (fig.empty()) throw EmptyFigure("cannot render an empty figure");

  Box box;
  for (const auto& [name, kind] : fig.order()) {
    if (kind == Figure::Kind::point) {
      box.add(fig.point(name));
    } else if (kind == Figure::Kind::curve) {
      const Curve& c = fig.curve(name);
      if (const auto* circle = std::get_if<Circle<double>>(&c)) {
        box.add(circle->center, circle->radius);
      } else {
        const auto& line = std::get<Line<double>>(c);
        box.add(line.p);
        box.add(line.q);
      }
    }
  }

  Canvas canvas(box, opts);
  for (const auto& [name, kind] : fig.order()) {
    switch (kind) {
      case Figure::Kind::point:
        canvas.marker(fig.point(name), name);
        break;
      case Figure::Kind::curve: {
        const Curve& c = fig.curve(name);
        if (const auto* circle = std::get_if<Circle<double>>(&c)) {
          canvas.circle(*circle, name);
        } else {
          canvas.line(std::get<Line<double>>(c), name);
        }
        break;
      }
      case Figure::Kind::scalar:
        canvas.caption(name + " = " + canvas.num(fig.scalar(name)));
        break;
    }
  }
  return canvas.finish();
}

std::string render_polygon_svg(const PolygonResult& poly, Method m, const RenderOptions& opts) {
  opts.validate();
  if (poly.vertices.empty()) throw EmptyFigure("polygon has no vertices");

  const Point center(0.0, 0.0);
  Box box;
  box.add(center, 1.0);
  Canvas canvas(box, opts);
  canvas.circle({center, 1.0}, "main");

  std::vector<Point> path = poly.vertices;
  const auto n = static_cast<double>(poly.vertices.size());
  path.push_back(rotate(poly.vertices.front(), center, n * poly.step_angle));
  canvas.polyline(path, "polygon");
  for (std::size_t k = 0; k < poly.vertices.size(); ++k) {
    canvas.marker(poly.vertices[k], "v" + std::to_string(k));
  }

  // captions use 6 decimals whatever `decimals` says
  canvas.caption(std::string(to_string(m)) + " n = " + std::to_string(poly.vertices.size()) +
                 ", step = " + format_fixed(poly.step_angle, 6));
  canvas.caption("closure gap = " + format_fixed(poly.closure_gap, 6) + " rad");
  return canvas.finish();
}

}  // namespace circdiv
