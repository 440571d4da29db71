#pragma once

// Certification of unit-distance drawings: edge residuals, the gap between
// non-adjacent distances and 1, and geometric degeneracies.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string_view>
#include <utility>
#include <vector>

#include "unitdist/errors.hpp"
#include "unitdist/graph.hpp"
#include "unitdist/layout.hpp"

namespace unitdist {

/// True iff `pt` is within `tol` of segment ab and its projection parameter
/// lies strictly inside (tol, 1 - tol). Endpoints do not count.
inline bool point_on_segment_interior(Point pt, Point a, Point b, double tol = 1e-9) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  if (std::sqrt(len2) <= tol) {
    throw DegenerateSegmentError("point_on_segment_interior: segment endpoints coincide");
  }
  const double t = dot(pt - a, d) / len2;
  const Point nearest = a + std::clamp(t, 0.0, 1.0) * d;
  return distance(pt, nearest) < tol && t > tol && t < 1.0 - tol;
}

/// True iff the segments are collinear within `tol` and share a piece of
/// length greater than `tol`. Touching at a single point does not count.
inline bool segments_overlap(Point a1, Point b1, Point a2, Point b2, double tol = 1e-9) {
  const Point d = b1 - a1;
  const double len = norm(d);
  if (len <= tol || distance(a2, b2) <= tol) {
    throw DegenerateSegmentError("segments_overlap: segment endpoints coincide");
  }
  if (std::abs(cross(d, a2 - a1)) / len >= tol || std::abs(cross(d, b2 - a1)) / len >= tol) {
    return false;
  }
  double t0 = dot(a2 - a1, d) / len;
  double t1 = dot(b2 - a1, d) / len;
  if (t0 > t1) std::swap(t0, t1);
  return std::min(len, t1) - std::max(0.0, t0) > tol;
}

enum class DegeneracyKind { CoincidentVertices, VertexOnEdgeInterior, OverlappingEdges };

inline std::string_view to_string(DegeneracyKind kind) {
  switch (kind) {
    case DegeneracyKind::CoincidentVertices: return "coincident-vertices";
    case DegeneracyKind::VertexOnEdgeInterior: return "vertex-on-edge-interior";
    case DegeneracyKind::OverlappingEdges: return "collinear-overlapping-edges";
  }
  return "unknown";
}

/// One geometric defect. Witnesses are vertex ids:
///  coincident-vertices: {u, v}
///  vertex-on-edge-interior: {w, u, v} for w inside edge uv
///  collinear-overlapping-edges: {u1, v1, u2, v2}
struct Degeneracy {
  DegeneracyKind kind;
  std::vector<Vertex> witness;

  friend bool operator==(const Degeneracy&, const Degeneracy&) = default;
};

/// A non-adjacent pair and its gap | |u - v| - 1 |.
struct PairGap {
  Vertex u = 0;
  Vertex v = 0;
  double gap = 0.0;

  friend bool operator==(const PairGap&, const PairGap&) = default;
};

struct VerifyOptions {
  double edge_tol = 1e-9;
  double gap_threshold = 1e-2;
  double degeneracy_tol = 1e-9;
};

struct FaithfulnessReport {
  double max_edge_residual = 0.0;
  Edge max_edge_witness;
  /// +infinity when the graph is complete.
  double min_nonedge_gap = std::numeric_limits<double>::infinity();
  PairGap min_nonedge_witness;
  /// +infinity with fewer than two vertices.
  double min_vertex_separation = std::numeric_limits<double>::infinity();
  Edge min_separation_witness;
  /// Non-adjacent pairs whose gap is below gap_threshold, in pair order.
  std::vector<PairGap> near_unit_nonedges;
  std::vector<Degeneracy> degeneracies;
  std::size_t edges_checked = 0;
  std::size_t nonedges_checked = 0;
  double edge_tol = 0.0;
  double gap_threshold = 0.0;
  bool is_unit_distance = false;
  bool is_faithful = false;
};

/// Exhaustive check of every vertex pair, every vertex against every
/// non-incident edge, and every pair of edges.
inline FaithfulnessReport verify(const Drawing& d, const VerifyOptions& opts = {}) {
  if (!(opts.edge_tol > 0.0) || !(opts.gap_threshold > opts.edge_tol)) {
    throw ParameterDomainError("verify: need 0 < edge_tol < gap_threshold");
  }
  const Graph& g = d.graph();
  const auto& pos = d.positions();
  const std::size_t n = g.n_vertices();

  FaithfulnessReport rep;
  rep.edge_tol = opts.edge_tol;
  rep.gap_threshold = opts.gap_threshold;

  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const double dist = distance(pos[u], pos[v]);
      const double gap = std::abs(dist - 1.0);
      if (dist < rep.min_vertex_separation) {
        rep.min_vertex_separation = dist;
        rep.min_separation_witness = Edge(u, v);
      }
      if (dist < opts.degeneracy_tol) {
        rep.degeneracies.push_back({DegeneracyKind::CoincidentVertices, {u, v}});
      }
      if (g.adjacent(u, v)) {
        ++rep.edges_checked;
        if (rep.edges_checked == 1 || gap > rep.max_edge_residual) {
          rep.max_edge_residual = gap;
          rep.max_edge_witness = Edge(u, v);
        }
      } else {
        ++rep.nonedges_checked;
        if (gap < rep.min_nonedge_gap) {
          rep.min_nonedge_gap = gap;
          rep.min_nonedge_witness = {u, v, gap};
        }
        if (gap < opts.gap_threshold) rep.near_unit_nonedges.push_back({u, v, gap});
      }
    }
  }

  // Zero-length edges are already reported as coincident vertices.
  const auto usable = [&](const Edge& e) {
    return distance(pos[e.u], pos[e.v]) > opts.degeneracy_tol;
  };
  const auto edges = g.edges();
  for (Vertex w = 0; w < n; ++w) {
    for (const Edge& e : edges) {
      if (e.contains(w) || !usable(e)) continue;
      if (point_on_segment_interior(pos[w], pos[e.u], pos[e.v], opts.degeneracy_tol)) {
        rep.degeneracies.push_back({DegeneracyKind::VertexOnEdgeInterior, {w, e.u, e.v}});
      }
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!usable(edges[i])) continue;
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (!usable(edges[j])) continue;
      const Edge& e = edges[i];
      const Edge& f = edges[j];
      if (segments_overlap(pos[e.u], pos[e.v], pos[f.u], pos[f.v], opts.degeneracy_tol)) {
        rep.degeneracies.push_back({DegeneracyKind::OverlappingEdges, {e.u, e.v, f.u, f.v}});
      }
    }
  }

  rep.is_unit_distance = rep.max_edge_residual <= opts.edge_tol;
  rep.is_faithful = rep.is_unit_distance && rep.min_nonedge_gap >= opts.gap_threshold &&
                    rep.degeneracies.empty();
  return rep;
}

}  // namespace unitdist
