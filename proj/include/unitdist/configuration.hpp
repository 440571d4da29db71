#pragma once

// Isometric point-circle configurations obtained from a faithful bipartite
// unit-distance drawing: one colour class gives unit-circle centres, the
// other gives the points.

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "unitdist/errors.hpp"
#include "unitdist/graph.hpp"
#include "unitdist/layout.hpp"
#include "unitdist/verifier.hpp"

namespace unitdist {

enum class CentersClass { A, B };

inline std::string_view to_string(CentersClass c) { return c == CentersClass::A ? "a" : "b"; }

struct Circle {
  Point center;
  double radius = 1.0;

  friend bool operator==(const Circle&, const Circle&) = default;
};

/// Dense boolean point-by-circle matrix.
class IncidenceMatrix {
 public:
  IncidenceMatrix() = default;
  IncidenceMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool operator()(std::size_t r, std::size_t c) const { return cells_.at(r * cols_ + c) != 0; }
  void set(std::size_t r, std::size_t c, bool on) { cells_.at(r * cols_ + c) = on ? 1 : 0; }

  IncidenceMatrix transposed() const {
    IncidenceMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, (*this)(r, c));
    }
    return t;
  }

  friend bool operator==(const IncidenceMatrix&, const IncidenceMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<unsigned char> cells_;
};

struct IncidenceStructure {
  std::vector<Point> points;
  std::vector<Circle> circles;
  IncidenceMatrix incidence;  // [point][circle]
  std::vector<Vertex> point_labels;
  std::vector<Vertex> circle_labels;

  friend bool operator==(const IncidenceStructure&, const IncidenceStructure&) = default;
};

/// Builds the configuration with unit circles centred on `centers_class`.
///
/// The drawing must verify as faithful under `opts` (NotFaithfulError
/// otherwise). Incidence is computed metrically with `incidence_tol` and then
/// compared against graph adjacency; any disagreement raises
/// IncidenceMismatchError.
inline IncidenceStructure build_point_circle(const Drawing& d, const Bipartition& bp,
                                             CentersClass centers_class, double incidence_tol = 1e-9,
                                             const VerifyOptions& opts = {}) {
  const Graph& g = d.graph();
  if (bp.class_a.size() + bp.class_b.size() != g.n_vertices()) {
    throw std::invalid_argument("build_point_circle: bipartition does not cover the drawing");
  }
  const FaithfulnessReport report = verify(d, opts);
  if (!report.is_faithful) {
    throw NotFaithfulError("build_point_circle: drawing is not a faithful unit-distance drawing");
  }

  const auto& centers = centers_class == CentersClass::A ? bp.class_a : bp.class_b;
  const auto& points = centers_class == CentersClass::A ? bp.class_b : bp.class_a;

  IncidenceStructure s;
  s.point_labels = points;
  s.circle_labels = centers;
  for (Vertex v : points) s.points.push_back(d.position(v));
  for (Vertex v : centers) s.circles.push_back({d.position(v), 1.0});
  s.incidence = IncidenceMatrix(points.size(), centers.size());

  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < centers.size(); ++j) {
      const double off = std::abs(distance(s.points[i], s.circles[j].center) - s.circles[j].radius);
      const bool metric = off <= incidence_tol;
      if (metric != g.adjacent(points[i], centers[j])) {
        throw IncidenceMismatchError("build_point_circle: metric incidence of point " +
                                         std::to_string(points[i]) + " and circle " +
                                         std::to_string(centers[j]) + " disagrees with adjacency",
                                     points[i], centers[j]);
      }
      s.incidence.set(i, j, metric);
    }
  }
  return s;
}

/// Former centres become points and vice versa; incidence is transposed.
inline IncidenceStructure dual(const IncidenceStructure& s) {
  IncidenceStructure t;
  for (const Circle& c : s.circles) t.points.push_back(c.center);
  for (const Point& p : s.points) t.circles.push_back({p, 1.0});
  t.incidence = s.incidence.transposed();
  t.point_labels = s.circle_labels;
  t.circle_labels = s.point_labels;
  return t;
}

/// (v_r, b_c): v points each on r circles, b circles each through c points.
struct ConfigurationSignature {
  std::size_t points = 0;
  std::size_t circles = 0;
  std::size_t point_degree = 0;
  std::size_t circle_degree = 0;

  friend bool operator==(const ConfigurationSignature&, const ConfigurationSignature&) = default;
};

enum class ViolationKind {
  ShapeMismatch,
  IrregularPointDegree,
  IrregularCircleDegree,
  PointsShareCircles,
  CirclesSharePoints,
};

inline std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::ShapeMismatch: return "shape-mismatch";
    case ViolationKind::IrregularPointDegree: return "irregular-point-degree";
    case ViolationKind::IrregularCircleDegree: return "irregular-circle-degree";
    case ViolationKind::PointsShareCircles: return "points-share-circles";
    case ViolationKind::CirclesSharePoints: return "circles-share-points";
  }
  return "unknown";
}

/// Witness indices are positions in the structure's point/circle sequences.
/// Degree violations list {index, degree}; sharing violations list the two
/// offending elements followed by the shared elements.
struct Violation {
  ViolationKind kind;
  std::vector<std::size_t> witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ConfigurationCheck {
  std::optional<ConfigurationSignature> signature;
  std::vector<Violation> violations;

  bool valid() const noexcept { return signature.has_value(); }
};

/// Combinatorial configuration axioms on the incidence matrix alone.
inline ConfigurationCheck validate_configuration(const IncidenceStructure& s) {
  ConfigurationCheck out;
  const IncidenceMatrix& m = s.incidence;
  const std::size_t np = s.points.size();
  const std::size_t nc = s.circles.size();
  if (m.rows() != np || m.cols() != nc) {
    out.violations.push_back({ViolationKind::ShapeMismatch, {m.rows(), m.cols(), np, nc}});
    return out;
  }

  std::vector<std::size_t> point_deg(np, 0);
  std::vector<std::size_t> circle_deg(nc, 0);
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t j = 0; j < nc; ++j) {
      if (m(i, j)) {
        ++point_deg[i];
        ++circle_deg[j];
      }
    }
  }
  for (std::size_t i = 1; i < np; ++i) {
    if (point_deg[i] != point_deg[0]) {
      out.violations.push_back({ViolationKind::IrregularPointDegree, {i, point_deg[i]}});
    }
  }
  for (std::size_t j = 1; j < nc; ++j) {
    if (circle_deg[j] != circle_deg[0]) {
      out.violations.push_back({ViolationKind::IrregularCircleDegree, {j, circle_deg[j]}});
    }
  }

  for (std::size_t a = 0; a < np; ++a) {
    for (std::size_t b = a + 1; b < np; ++b) {
      std::vector<std::size_t> w{a, b};
      for (std::size_t j = 0; j < nc; ++j) {
        if (m(a, j) && m(b, j)) w.push_back(j);
      }
      if (w.size() > 3) out.violations.push_back({ViolationKind::PointsShareCircles, std::move(w)});
    }
  }
  for (std::size_t a = 0; a < nc; ++a) {
    for (std::size_t b = a + 1; b < nc; ++b) {
      std::vector<std::size_t> w{a, b};
      for (std::size_t i = 0; i < np; ++i) {
        if (m(i, a) && m(i, b)) w.push_back(i);
      }
      if (w.size() > 3) out.violations.push_back({ViolationKind::CirclesSharePoints, std::move(w)});
    }
  }

  if (out.violations.empty()) {
    out.signature = ConfigurationSignature{np, nc, np ? point_deg[0] : 0, nc ? circle_deg[0] : 0};
  }
  return out;
}

}  // namespace unitdist
