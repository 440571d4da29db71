#pragma once

// Deterministic SVG output for drawings and point-circle configurations.
// Only <line>, <circle> and <text> elements are emitted inside the root.

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "unitdist/configuration.hpp"
#include "unitdist/layout.hpp"

namespace unitdist {

struct RenderStyle {
  double scale = 120.0;  // pixels per unit length
  double margin = 30.0;
  double vertex_radius = 5.0;
  bool show_labels = true;
  double edge_width = 2.0;
  double circle_width = 1.5;
  double font_size = 12.0;
  std::string edge_color = "#1f3b73";
  std::string vertex_fill = "#d62728";
  std::string vertex_stroke = "#000000";
  std::string circle_color = "#2c7fb8";
  std::string point_fill = "#000000";
  std::string label_color = "#333333";
};

namespace detail {

// Fixed six decimals; negative zero is printed as zero.
inline std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

struct Viewport {
  double min_x = 0.0;
  double max_y = 0.0;
  double width = 0.0;
  double height = 0.0;
  double scale = 1.0;
  double margin = 0.0;

  // SVG y grows downward.
  double sx(double x) const { return (x - min_x) * scale + margin; }
  double sy(double y) const { return (max_y - y) * scale + margin; }
};

struct Bounds {
  double min_x = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void add(Point p, double pad = 0.0) {
    min_x = std::min(min_x, p.x - pad);
    max_x = std::max(max_x, p.x + pad);
    min_y = std::min(min_y, p.y - pad);
    max_y = std::max(max_y, p.y + pad);
  }
  bool empty() const { return min_x > max_x; }
};

inline Viewport make_viewport(const Bounds& b, const RenderStyle& style) {
  if (!(style.scale > 0.0) || style.margin < 0.0) {
    throw std::invalid_argument("RenderStyle: need scale > 0 and margin >= 0");
  }
  Viewport vp;
  vp.scale = style.scale;
  vp.margin = style.margin;
  if (!b.empty()) {
    vp.min_x = b.min_x;
    vp.max_y = b.max_y;
    vp.width = (b.max_x - b.min_x) * style.scale;
    vp.height = (b.max_y - b.min_y) * style.scale;
  }
  vp.width += 2 * style.margin;
  vp.height += 2 * style.margin;
  return vp;
}

inline void open_svg(std::ostringstream& out, const Viewport& vp) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed6(vp.width)
      << "\" height=\"" << fixed6(vp.height) << "\" viewBox=\"0 0 " << fixed6(vp.width) << ' '
      << fixed6(vp.height) << "\">\n";
}

inline void label(std::ostringstream& out, const Viewport& vp, Point p, std::size_t id,
                  const RenderStyle& style) {
  const double offset = style.vertex_radius + 2.0;
  out << "  <text class=\"label\" x=\"" << fixed6(vp.sx(p.x) + offset) << "\" y=\""
      << fixed6(vp.sy(p.y) - offset) << "\" font-size=\"" << fixed6(style.font_size)
      << "\" font-family=\"sans-serif\" fill=\"" << style.label_color << "\">" << id << "</text>\n";
}

}  // namespace detail

/// Edges (sorted) as lines, then vertices as discs, then optional labels.
inline std::string render_drawing(const Drawing& d, const RenderStyle& style = {}) {
  detail::Bounds bounds;
  for (const Point& p : d.positions()) bounds.add(p);
  const detail::Viewport vp = detail::make_viewport(bounds, style);

  std::ostringstream out;
  detail::open_svg(out, vp);
  for (const Edge& e : d.graph().edges()) {
    const Point a = d.position(e.u);
    const Point b = d.position(e.v);
    out << "  <line class=\"edge\" x1=\"" << detail::fixed6(vp.sx(a.x)) << "\" y1=\""
        << detail::fixed6(vp.sy(a.y)) << "\" x2=\"" << detail::fixed6(vp.sx(b.x)) << "\" y2=\""
        << detail::fixed6(vp.sy(b.y)) << "\" stroke=\"" << style.edge_color << "\" stroke-width=\""
        << detail::fixed6(style.edge_width) << "\"/>\n";
  }
  for (std::size_t v = 0; v < d.size(); ++v) {
    const Point p = d.position(v);
    out << "  <circle class=\"vertex\" cx=\"" << detail::fixed6(vp.sx(p.x)) << "\" cy=\""
        << detail::fixed6(vp.sy(p.y)) << "\" r=\"" << detail::fixed6(style.vertex_radius)
        << "\" fill=\"" << style.vertex_fill << "\" stroke=\"" << style.vertex_stroke << "\"/>\n";
  }
  if (style.show_labels) {
    for (std::size_t v = 0; v < d.size(); ++v) detail::label(out, vp, d.position(v), v, style);
  }
  out << "</svg>\n";
  return out.str();
}

/// Unfilled circles of radius scale * radius, then points as filled discs,
/// then optional labels (circle labels at their centres).
inline std::string render_configuration(const IncidenceStructure& s, const RenderStyle& style = {}) {
  detail::Bounds bounds;
  for (const Point& p : s.points) bounds.add(p);
  for (const Circle& c : s.circles) bounds.add(c.center, c.radius);
  const detail::Viewport vp = detail::make_viewport(bounds, style);

  std::ostringstream out;
  detail::open_svg(out, vp);
  for (const Circle& c : s.circles) {
    out << "  <circle class=\"config-circle\" cx=\"" << detail::fixed6(vp.sx(c.center.x))
        << "\" cy=\"" << detail::fixed6(vp.sy(c.center.y)) << "\" r=\""
        << detail::fixed6(c.radius * style.scale) << "\" fill=\"none\" stroke=\""
        << style.circle_color << "\" stroke-width=\"" << detail::fixed6(style.circle_width)
        << "\"/>\n";
  }
  for (const Point& p : s.points) {
    out << "  <circle class=\"config-point\" cx=\"" << detail::fixed6(vp.sx(p.x)) << "\" cy=\""
        << detail::fixed6(vp.sy(p.y)) << "\" r=\"" << detail::fixed6(style.vertex_radius)
        << "\" fill=\"" << style.point_fill << "\"/>\n";
  }
  if (style.show_labels) {
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      const std::size_t id = i < s.point_labels.size() ? s.point_labels[i] : i;
      detail::label(out, vp, s.points[i], id, style);
    }
    for (std::size_t j = 0; j < s.circles.size(); ++j) {
      const std::size_t id = j < s.circle_labels.size() ? s.circle_labels[j] : j;
      detail::label(out, vp, s.circles[j].center, id, style);
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace unitdist
