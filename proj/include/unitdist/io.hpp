#pragma once

// JSON forms of the stage artifacts, plus file helpers.
//
// Graph:         {"n_vertices": N, "edges": [[u, v], ...]}    (sorted, u < v)
// Solution:      {"h":, "k":, "p":, "q":, "residual_max":}
// Drawing:       {"graph": <graph>, "positions": [[x, y], ...]}
// Configuration: {"points": [{"label":, "position": [x, y]}],
//                 "circles": [{"label":, "center": [x, y], "radius":}],
//                 "incidence": [[point_label, circle_label], ...]}
//
// Doubles are written in shortest round-trip form (at most 17 significant
// digits), so reading an artifact back reproduces every value exactly.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "unitdist/configuration.hpp"
#include "unitdist/graph.hpp"
#include "unitdist/layout.hpp"
#include "unitdist/solver.hpp"
#include "unitdist/verifier.hpp"

namespace unitdist {

using json = nlohmann::json;

inline void to_json(json& j, const Edge& e) { j = json::array({e.u, e.v}); }
inline void from_json(const json& j, Edge& e) {
  e = Edge(j.at(0).get<Vertex>(), j.at(1).get<Vertex>());
}

inline void to_json(json& j, const Point& p) { j = json::array({p.x, p.y}); }
inline void from_json(const json& j, Point& p) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("point must be [x, y]");
  p = {j[0].get<double>(), j[1].get<double>()};
}

inline void to_json(json& j, const Graph& g) {
  j = json{{"n_vertices", g.n_vertices()},
           {"edges", std::vector<Edge>(g.edges().begin(), g.edges().end())}};
}
inline void from_json(const json& j, Graph& g) {
  g = Graph(j.at("n_vertices").get<std::size_t>(), j.at("edges").get<std::vector<Edge>>());
}

inline void to_json(json& j, const RhombusParams& x) {
  j = json{{"h", x.h}, {"k", x.k}, {"p", x.p}, {"q", x.q}, {"residual_max", residual(x).max_abs()}};
}
inline void from_json(const json& j, RhombusParams& x) {
  x = {j.at("h").get<double>(), j.at("k").get<double>(), j.at("p").get<double>(),
       j.at("q").get<double>()};
}

inline void to_json(json& j, const Drawing& d) {
  j = json{{"graph", d.graph()}, {"positions", d.positions()}};
}
inline void from_json(const json& j, Drawing& d) {
  d = Drawing(j.at("graph").get<Graph>(), j.at("positions").get<std::vector<Point>>());
}

inline void to_json(json& j, const PairGap& g) {
  j = json{{"pair", json::array({g.u, g.v})}, {"gap", g.gap}};
}

inline void to_json(json& j, const Degeneracy& d) {
  j = json{{"kind", to_string(d.kind)}, {"witness", d.witness}};
}

inline void to_json(json& j, const FaithfulnessReport& r) {
  j = json{{"max_edge_residual", r.max_edge_residual},
           {"max_edge_witness", r.max_edge_witness},
           {"min_nonedge_gap", r.min_nonedge_gap},
           {"min_nonedge_witness", r.min_nonedge_witness},
           {"min_vertex_separation", r.min_vertex_separation},
           {"min_separation_witness", r.min_separation_witness},
           {"near_unit_nonedges", r.near_unit_nonedges},
           {"degeneracies", r.degeneracies},
           {"edges_checked", r.edges_checked},
           {"nonedges_checked", r.nonedges_checked},
           {"edge_tol", r.edge_tol},
           {"gap_threshold", r.gap_threshold},
           {"is_unit_distance", r.is_unit_distance},
           {"is_faithful", r.is_faithful}};
}

inline void to_json(json& j, const IncidenceStructure& s) {
  json points = json::array();
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    points.push_back({{"label", s.point_labels.at(i)}, {"position", s.points[i]}});
  }
  json circles = json::array();
  for (std::size_t i = 0; i < s.circles.size(); ++i) {
    circles.push_back({{"label", s.circle_labels.at(i)},
                       {"center", s.circles[i].center},
                       {"radius", s.circles[i].radius}});
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    for (std::size_t c = 0; c < s.circles.size(); ++c) {
      if (s.incidence(i, c)) pairs.emplace_back(s.point_labels.at(i), s.circle_labels.at(c));
    }
  }
  std::sort(pairs.begin(), pairs.end());
  json incidence = json::array();
  for (const auto& [p, c] : pairs) incidence.push_back({p, c});
  j = json{{"points", std::move(points)}, {"circles", std::move(circles)}, {"incidence", std::move(incidence)}};
}

inline void from_json(const json& j, IncidenceStructure& s) {
  s = {};
  std::map<Vertex, std::size_t> point_index;
  std::map<Vertex, std::size_t> circle_index;
  for (const json& p : j.at("points")) {
    point_index[p.at("label").get<Vertex>()] = s.points.size();
    s.point_labels.push_back(p.at("label").get<Vertex>());
    s.points.push_back(p.at("position").get<Point>());
  }
  for (const json& c : j.at("circles")) {
    circle_index[c.at("label").get<Vertex>()] = s.circles.size();
    s.circle_labels.push_back(c.at("label").get<Vertex>());
    s.circles.push_back({c.at("center").get<Point>(), c.at("radius").get<double>()});
  }
  s.incidence = IncidenceMatrix(s.points.size(), s.circles.size());
  for (const json& pair : j.at("incidence")) {
    s.incidence.set(point_index.at(pair.at(0).get<Vertex>()),
                    circle_index.at(pair.at(1).get<Vertex>()), true);
  }
}

inline void to_json(json& j, const ConfigurationCheck& c) {
  j = json{{"valid", c.valid()}};
  if (c.signature) {
    j["signature"] = {{"points", c.signature->points},
                      {"circles", c.signature->circles},
                      {"point_degree", c.signature->point_degree},
                      {"circle_degree", c.signature->circle_degree}};
  }
  json violations = json::array();
  for (const Violation& v : c.violations) {
    violations.push_back({{"kind", to_string(v.kind)}, {"witness", v.witness}});
  }
  j["violations"] = std::move(violations);
}

inline std::string to_text(const json& j) { return j.dump(2) + "\n"; }

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

inline json read_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return json::parse(in);
}

}  // namespace unitdist
