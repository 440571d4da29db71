#pragma once

// Planar drawings of graphs: the rhombus-shaped faithful layout of GP(8,3)
// and the circular unit-distance layout of any GP(n,s).

#include <algorithm>
#include <cmath>
#include <compare>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "unitdist/errors.hpp"
#include "unitdist/graph.hpp"

namespace unitdist {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double t, Point a) { return {t * a.x, t * a.y}; }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

/// Unknowns of the rhombus system. Outer vertex 0 sits at (0, k), outer
/// vertex 6 at (h, 0) and inner vertex 13 at (p, q); every other vertex
/// follows from the D2 symmetry.
struct RhombusParams {
  double h = 0.0;
  double k = 0.0;
  double p = 0.0;
  double q = 0.0;

  friend bool operator==(const RhombusParams&, const RhombusParams&) = default;
  friend auto operator<=>(const RhombusParams&, const RhombusParams&) = default;
};

/// Vertex positions for a graph, in units of the edge length.
class Drawing {
 public:
  Drawing() = default;

  Drawing(Graph graph, std::vector<Point> positions)
      : graph_(std::move(graph)), positions_(std::move(positions)) {
    if (positions_.size() != graph_.n_vertices()) {
      throw std::invalid_argument("drawing has " + std::to_string(positions_.size()) +
                                  " positions for " + std::to_string(graph_.n_vertices()) +
                                  " vertices");
    }
    for (std::size_t v = 0; v < positions_.size(); ++v) {
      if (!std::isfinite(positions_[v].x) || !std::isfinite(positions_[v].y)) {
        throw std::invalid_argument("non-finite position for vertex " + std::to_string(v));
      }
    }
  }

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<Point>& positions() const noexcept { return positions_; }
  Point position(Vertex v) const { return positions_.at(v); }
  std::size_t size() const noexcept { return positions_.size(); }

  friend bool operator==(const Drawing&, const Drawing&) = default;

 private:
  Graph graph_;
  std::vector<Point> positions_;
};

/// Drawing of GP(8,3) with a rhombus-shaped outer 8-cycle. Valid for any
/// parameters; unit edge lengths only when `params` solves the system.
inline Drawing rhombus_layout(const RhombusParams& params) {
  const auto [h, k, p, q] = params;
  std::vector<Point> pos{
      {0.0, k},         {-h / 2, k / 2}, {-h, 0.0}, {-h / 2, -k / 2},
      {0.0, -k},        {h / 2, -k / 2}, {h, 0.0},  {h / 2, k / 2},
      {0.0, k - 1.0},   {-p, -q},        {1.0 - h, 0.0}, {-p, q},
      {0.0, 1.0 - k},   {p, q},          {h - 1.0, 0.0}, {p, -q},
  };
  return Drawing(mobius_kantor(), std::move(pos));
}

/// Direction in which the inner ring is turned relative to the outer ring.
enum class RotationSign : int { Negative = -1, Positive = +1 };

struct CircularGeometry {
  double outer_radius = 0.0;
  double inner_radius = 0.0;
  double inner_offset = 0.0;  // unsigned angle between spoke endpoints, radians
};

/// Radii and inner offset for the unit-distance circular layout of GP(n,s).
/// Outer and inner chords have unit length by choice of radius; the offset
/// makes spokes unit length.
inline CircularGeometry circular_geometry(std::size_t n, std::size_t s) {
  if (n < 3 || s < 1 || 2 * s >= n) {
    throw ParameterDomainError("circular_layout: need n >= 3 and 1 <= s < n/2");
  }
  const double pi = std::numbers::pi;
  const double big_r = 1.0 / (2.0 * std::sin(pi / static_cast<double>(n)));
  const double small_r =
      1.0 / (2.0 * std::sin(static_cast<double>(s) * pi / static_cast<double>(n)));
  if (std::abs(big_r - small_r) > 1.0 || big_r + small_r < 1.0) {
    throw InfeasibleLayoutError("circular_layout: no unit spoke for GP(" + std::to_string(n) +
                                "," + std::to_string(s) + "), radii " + std::to_string(big_r) +
                                " and " + std::to_string(small_r));
  }
  const double cos_alpha = (big_r * big_r + small_r * small_r - 1.0) / (2.0 * big_r * small_r);
  return {big_r, small_r, std::acos(std::clamp(cos_alpha, -1.0, 1.0))};
}

/// Outer vertex i at angle pi/2 + 2*pi*i/n on radius R; inner vertex n+j at
/// angle pi/2 + 2*pi*j/n + sign*alpha on radius r. Vertex 0 is on top.
inline Drawing circular_layout(std::size_t n, std::size_t s,
                               RotationSign sign = RotationSign::Negative) {
  const CircularGeometry geo = circular_geometry(n, s);
  const double pi = std::numbers::pi;
  const double offset = static_cast<double>(static_cast<int>(sign)) * geo.inner_offset;
  std::vector<Point> pos(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = pi / 2 + 2 * pi * static_cast<double>(i) / static_cast<double>(n);
    pos[i] = {geo.outer_radius * std::cos(theta), geo.outer_radius * std::sin(theta)};
    pos[n + i] = {geo.inner_radius * std::cos(theta + offset),
                  geo.inner_radius * std::sin(theta + offset)};
  }
  return Drawing(generalized_petersen(n, s), std::move(pos));
}

}  // namespace unitdist
