#pragma once

// Simple undirected graphs, generalized Petersen graphs, 2-colouring and
// automorphism counting.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unitdist/errors.hpp"

namespace unitdist {

using Vertex = std::size_t;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool contains(Vertex w) const noexcept { return u == w || v == w; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n_vertices()-1.
///
/// Edges are kept sorted lexicographically; adjacency lists are sorted
/// ascending. Self-loops, duplicate edges and out-of-range endpoints are
/// rejected at construction.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t n_vertices, std::vector<Edge> edges)
      : n_vertices_(n_vertices), edges_(std::move(edges)), adjacency_(n_vertices),
        matrix_(n_vertices * n_vertices, 0) {
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (e.u == e.v) {
        throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
      }
      if (e.v >= n_vertices_) {
        throw std::invalid_argument("edge endpoint " + std::to_string(e.v) + " out of range");
      }
      if (i > 0 && edges_[i - 1] == e) {
        throw std::invalid_argument("duplicate edge {" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + "}");
      }
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
      matrix_[e.u * n_vertices_ + e.v] = 1;
      matrix_[e.v * n_vertices_ + e.u] = 1;
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  }

  std::size_t n_vertices() const noexcept { return n_vertices_; }
  std::size_t n_edges() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool adjacent(Vertex a, Vertex b) const noexcept {
    return a < n_vertices_ && b < n_vertices_ && matrix_[a * n_vertices_ + b] != 0;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_vertices_ == b.n_vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<unsigned char> matrix_;
};

/// GP(n, s): outer cycle on 0..n-1, spokes i -- n+i, inner edges
/// n+j -- n+((j+s) mod n).
inline Graph generalized_petersen(std::size_t n, std::size_t s) {
  if (n < 3) {
    throw ParameterDomainError("generalized_petersen: n must be at least 3");
  }
  // 2s < n keeps inner edges distinct and loop-free.
  if (s < 1 || 2 * s >= n) {
    throw ParameterDomainError("generalized_petersen: need 1 <= s < n/2 (n=" + std::to_string(n) +
                               ", s=" + std::to_string(s) + ")");
  }
  std::vector<Edge> edges;
  edges.reserve(3 * n);
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(i, n + i);
    edges.emplace_back(n + i, n + (i + s) % n);
  }
  return Graph(2 * n, std::move(edges));
}

/// The Möbius–Kantor graph with outer vertices 0..7 and inner 8..15.
inline Graph mobius_kantor() { return generalized_petersen(8, 3); }

struct Bipartition {
  std::vector<Vertex> class_a;
  std::vector<Vertex> class_b;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Deterministic 2-colouring: BFS from vertex 0 (which lands in class_a),
/// then from each lowest-numbered unvisited vertex. Both classes are sorted.
///
/// Throws NotBipartiteError whose odd_cycle() lists the vertices of an odd
/// cycle in traversal order.
inline Bipartition bipartition(const Graph& g) {
  const std::size_t n = g.n_vertices();
  constexpr int kUncoloured = -1;
  std::vector<int> colour(n, kUncoloured);
  std::vector<Vertex> parent(n);
  std::vector<std::size_t> depth(n, 0);

  for (Vertex root = 0; root < n; ++root) {
    if (colour[root] != kUncoloured) continue;
    colour[root] = 0;
    parent[root] = root;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (colour[w] == kUncoloured) {
          colour[w] = 1 - colour[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          // Climb both BFS-tree paths to their common ancestor.
          std::vector<Vertex> left{u};
          std::vector<Vertex> right{w};
          Vertex a = u;
          Vertex b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          std::vector<Vertex> cycle(left.begin(), left.end());
          cycle.insert(cycle.end(), right.rbegin(), right.rend());
          throw NotBipartiteError("graph is not bipartite: odd cycle of length " +
                                      std::to_string(cycle.size()),
                                  std::move(cycle));
        }
      }
    }
  }

  Bipartition result;
  for (Vertex v = 0; v < n; ++v) {
    (colour[v] == 0 ? result.class_a : result.class_b).push_back(v);
  }
  return result;
}

/// True iff `perm` is a bijection on the vertex set mapping edges to edges.
inline bool is_automorphism(const Graph& g, std::span<const Vertex> perm) {
  const std::size_t n = g.n_vertices();
  if (perm.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (Vertex image : perm) {
    if (image >= n || seen[image]) return false;
    seen[image] = true;
  }
  // Bijective and edge counts agree, so edge -> edge suffices.
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return g.adjacent(perm[e.u], perm[e.v]); });
}

/// Number of adjacency-preserving vertex permutations.
///
/// Plain backtracking: vertices are assigned in BFS order so that each one
/// after the first of its component has an already-mapped neighbour, which
/// restricts its candidate images to the neighbours of that neighbour's
/// image. Candidates must also match degree and adjacency to every vertex
/// mapped so far. Intended for graphs up to a few dozen vertices.
inline std::uint64_t automorphism_count(const Graph& g) {
  const std::size_t n = g.n_vertices();
  if (n == 0) return 1;

  std::vector<Vertex> order;
  std::vector<Vertex> anchor(n, n);  // earlier-ordered neighbour, or n for a component root
  {
    std::vector<bool> queued(n, false);
    for (Vertex root = 0; root < n; ++root) {
      if (queued[root]) continue;
      queued[root] = true;
      std::deque<Vertex> queue{root};
      while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        order.push_back(u);
        for (Vertex w : g.neighbors(u)) {
          if (!queued[w]) {
            queued[w] = true;
            anchor[w] = u;
            queue.push_back(w);
          }
        }
      }
    }
  }

  std::vector<Vertex> image(n, n);
  std::vector<bool> used(n, false);
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;

  std::uint64_t count = 0;
  auto extend = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      ++count;
      return;
    }
    const Vertex v = order[depth];
    const std::span<const Vertex> candidates =
        anchor[v] == n ? std::span<const Vertex>(all) : g.neighbors(image[anchor[v]]);
    for (Vertex c : candidates) {
      if (used[c] || g.degree(c) != g.degree(v)) continue;
      bool consistent = true;
      for (std::size_t i = 0; i < depth && consistent; ++i) {
        const Vertex u = order[i];
        consistent = g.adjacent(u, v) == g.adjacent(image[u], c);
      }
      if (!consistent) continue;
      image[v] = c;
      used[c] = true;
      self(self, depth + 1);
      used[c] = false;
      image[v] = n;
    }
  };
  extend(extend, 0);
  return count;
}

}  // namespace unitdist
