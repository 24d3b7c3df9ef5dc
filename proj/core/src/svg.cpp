#include "lombardi/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "lombardi/error.hpp"

namespace lombardi {

namespace {

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                 "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

CanvasTransform fit_canvas(const Drawing& d, const RenderOptions& o) {
  if (!(o.width > 0.0) || !(o.height > 0.0) || o.margin < 0.0 || !(o.stroke_width > 0.0) ||
      o.vertex_radius < 0.0) {
    throw Error(ErrorCode::ParseError, "render options need positive dimensions");
  }
  const double inner_w = o.width - 2.0 * o.margin;
  const double inner_h = o.height - 2.0 * o.margin;
  if (!(inner_w > 0.0) || !(inner_h > 0.0)) throw Error(ErrorCode::ParseError, "margin leaves no room");

  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  auto take = [&](Point p) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  };
  for (Point p : d.positions) take(p);
  for (const DrawnEdge& e : d.edges) {
    take(e.arc.p());
    take(e.arc.q());
    const auto circle = e.arc.is_segment() ? std::nullopt : e.arc.circle();
    if (!circle) continue;
    // axis-extreme points of the supporting circle that the arc passes
    for (Point dir : {Point{1, 0}, Point{0, 1}, Point{-1, 0}, Point{0, -1}}) {
      const Point x = circle->center + circle->radius * dir;
      const double s = e.arc.parameter_of(x);
      if (s > 0.0 && s < 1.0) take(x);
    }
  }
  CanvasTransform t;
  t.height = o.height;
  if (lo_x > hi_x) return t;  // nothing to draw
  const double w = hi_x - lo_x, h = hi_y - lo_y;
  if (w > 0.0 || h > 0.0) {
    const double inf = std::numeric_limits<double>::infinity();
    t.scale = std::min(w > 0.0 ? inner_w / w : inf, h > 0.0 ? inner_h / h : inf);
  }
  t.offset_x = o.width / 2.0 - t.scale * (lo_x + hi_x) / 2.0;
  t.offset_y = o.height / 2.0 - t.scale * (lo_y + hi_y) / 2.0;
  return t;
}

std::string to_svg(const Drawing& d, const RenderOptions& o) {
  const CanvasTransform t = fit_canvas(d, o);
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(o.width)
     << "\" height=\"" << num(o.height) << "\" viewBox=\"0 0 " << num(o.width) << ' ' << num(o.height)
     << "\">\n";
  os << "<g fill=\"none\" stroke-width=\"" << num(o.stroke_width) << "\" stroke-linecap=\"round\">\n";
  for (const DrawnEdge& e : d.edges) {
    const Arc& a = e.arc;
    const Point p = t.apply(a.p());
    const Point q = t.apply(a.q());
    const char* color = o.color_by_factor && e.factor >= 0 ? kPalette[e.factor % kPalette.size()] : "#222222";
    os << "<path stroke=\"" << color << "\" d=\"M " << num(p.x) << ' ' << num(p.y) << ' ';
    const auto circle = a.is_segment() ? std::nullopt : a.circle();
    if (!circle) {
      os << "L " << num(q.x) << ' ' << num(q.y);
    } else {
      const double r = t.scale * circle->radius;
      // SVG's positive sweep runs clockwise on screen
      os << "A " << num(r) << ' ' << num(r) << " 0 " << (std::abs(a.bulge()) > 1.0 ? 1 : 0) << ' '
         << (a.bulge() < 0.0 ? 1 : 0) << ' ' << num(q.x) << ' ' << num(q.y);
    }
    os << "\"/>\n";
  }
  os << "</g>\n<g fill=\"#000000\">\n";
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    const Point p = t.apply(d.positions[v]);
    os << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"" << num(o.vertex_radius)
       << "\"/>\n";
  }
  os << "</g>\n";
  if (o.labels) {
    os << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#444444\">\n";
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
      const Point p = t.apply(d.positions[v]);
      const std::string name = v < static_cast<int>(d.names.size()) ? d.names[v] : std::to_string(v);
      os << "<text x=\"" << num(p.x + o.vertex_radius + 2.0) << "\" y=\"" << num(p.y - o.vertex_radius - 2.0)
         << "\">" << escape(name) << "</text>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace lombardi
