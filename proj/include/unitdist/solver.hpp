#pragma once

// The four Pythagorean equations for the rhombus layout of GP(8,3), a damped
// Newton solver for them, and multi-start root enumeration.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "unitdist/graph.hpp"
#include "unitdist/layout.hpp"

namespace unitdist {

/// Left-minus-right values of the four equations.
struct ResidualVector {
  double f1 = 0.0;  // h^2 + k^2 = 4
  double f2 = 0.0;  // |13 - 8| = 1
  double f3 = 0.0;  // |13 - 10| = 1
  double f4 = 0.0;  // |13 - 5| = 1

  double max_abs() const {
    return std::max({std::abs(f1), std::abs(f2), std::abs(f3), std::abs(f4)});
  }
  Eigen::Vector4d as_vector() const { return {f1, f2, f3, f4}; }

  friend bool operator==(const ResidualVector&, const ResidualVector&) = default;
};

inline Eigen::Vector4d to_vector(const RhombusParams& x) { return {x.h, x.k, x.p, x.q}; }
inline RhombusParams to_params(const Eigen::Vector4d& v) { return {v[0], v[1], v[2], v[3]}; }

inline ResidualVector residual(const RhombusParams& x) {
  const auto [h, k, p, q] = x;
  const auto sq = [](double t) { return t * t; };
  return {
      sq(h) + sq(k) - 4.0,
      sq(p) + sq(q - k + 1.0) - 1.0,
      sq(q) + sq(p + h - 1.0) - 1.0,
      sq(p - h / 2) + sq(q + k / 2) - 1.0,
  };
}

/// Row i holds the partials of f_i with respect to (h, k, p, q).
inline Eigen::Matrix4d jacobian(const RhombusParams& x) {
  const auto [h, k, p, q] = x;
  const double a = q - k + 1.0;
  const double b = p + h - 1.0;
  const double c = p - h / 2;
  const double d = q + k / 2;
  Eigen::Matrix4d j;
  // clang-format off
  j << 2 * h,  2 * k,  0.0,    0.0,
       0.0,    -2 * a, 2 * p,  2 * a,
       2 * b,  0.0,    2 * b,  2 * q,
       -c,     d,      2 * c,  2 * d;
  // clang-format on
  return j;
}

enum class NewtonStatus { Converged, Singular, NoConvergence };

struct NewtonResult {
  NewtonStatus status = NewtonStatus::NoConvergence;
  RhombusParams params;
  int iterations = 0;
  double residual_max = 0.0;

  bool converged() const noexcept { return status == NewtonStatus::Converged; }
};

struct NewtonOptions {
  double tol = 1e-12;
  int max_iter = 50;
  double min_damping = 0x1p-20;
  /// Threshold on |det| of the row-equilibrated Jacobian.
  double singular_det = 1e-14;
};

/// Damped Newton iteration until the residual max-norm is at most `tol`.
/// Each step is halved until the residual 2-norm decreases, down to
/// `min_damping`; the smallest step is taken if no decrease is found.
inline NewtonResult newton_solve(const RhombusParams& seed, const NewtonOptions& opts = {}) {
  if (!(opts.tol > 0.0) || opts.max_iter < 1) {
    throw ParameterDomainError("newton_solve: need tol > 0 and max_iter >= 1");
  }
  Eigen::Vector4d x = to_vector(seed);
  NewtonResult out;
  for (int iter = 0;; ++iter) {
    const ResidualVector r = residual(to_params(x));
    out.params = to_params(x);
    out.iterations = iter;
    out.residual_max = r.max_abs();
    if (!std::isfinite(out.residual_max)) {
      out.status = NewtonStatus::NoConvergence;
      return out;
    }
    if (out.residual_max <= opts.tol) {
      out.status = NewtonStatus::Converged;
      return out;
    }
    if (iter == opts.max_iter) {
      out.status = NewtonStatus::NoConvergence;
      return out;
    }

    Eigen::Matrix4d j = jacobian(to_params(x));
    Eigen::Matrix4d scaled = j;
    for (int row = 0; row < 4; ++row) {
      const double m = scaled.row(row).cwiseAbs().maxCoeff();
      if (m == 0.0) {
        out.status = NewtonStatus::Singular;
        return out;
      }
      scaled.row(row) /= m;
    }
    if (std::abs(scaled.determinant()) < opts.singular_det) {
      out.status = NewtonStatus::Singular;
      return out;
    }

    const Eigen::Vector4d f = r.as_vector();
    const Eigen::Vector4d step = j.partialPivLu().solve(-f);
    const double f_norm = f.norm();
    double t = 1.0;
    while (t > opts.min_damping && residual(to_params(x + t * step)).as_vector().norm() >= f_norm) {
      t *= 0.5;
    }
    x += t * step;
  }
}

/// Seed box for enumeration; default [-3, 3]^4.
struct ParamBox {
  RhombusParams lower{-3.0, -3.0, -3.0, -3.0};
  RhombusParams upper{3.0, 3.0, 3.0, 3.0};
};

/// h > 0, k > 0 and all 16 vertices of the rhombus layout pairwise at least
/// `min_separation` apart.
inline bool is_non_degenerate(const RhombusParams& x, double min_separation = 1e-6) {
  if (!(x.h > 0.0 && x.k > 0.0)) return false;
  const Drawing d = rhombus_layout(x);
  const auto& pos = d.positions();
  for (std::size_t i = 0; i < pos.size(); ++i) {
    for (std::size_t j = i + 1; j < pos.size(); ++j) {
      if (distance(pos[i], pos[j]) < min_separation) return false;
    }
  }
  return true;
}

struct EnumerateOptions {
  std::size_t seed_count = 10000;
  std::uint64_t rng_seed = 42;
  ParamBox box;
  double dedupe_tol = 1e-6;
  NewtonOptions newton;
  double min_separation = 1e-6;
};

namespace detail {

// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
inline double unit_uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1p-53;
}

inline RhombusParams seed_point(std::uint64_t rng_seed, std::size_t index, const ParamBox& box) {
  std::seed_seq seq{static_cast<std::uint32_t>(rng_seed), static_cast<std::uint32_t>(rng_seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 gen(seq);
  const Eigen::Vector4d lo = to_vector(box.lower);
  const Eigen::Vector4d hi = to_vector(box.upper);
  Eigen::Vector4d v;
  for (int i = 0; i < 4; ++i) v[i] = lo[i] + (hi[i] - lo[i]) * unit_uniform(gen);
  return to_params(v);
}

inline double max_norm_distance(const RhombusParams& a, const RhombusParams& b) {
  return (to_vector(a) - to_vector(b)).cwiseAbs().maxCoeff();
}

}  // namespace detail

/// Multi-start Newton over `seed_count` uniform seeds in the box. Converged
/// roots are deduplicated (first seed index wins), filtered by
/// is_non_degenerate and sorted lexicographically by (h, k, p, q).
///
/// Each seed's random stream is derived from (rng_seed, index) alone, so the
/// result does not depend on evaluation order.
inline std::vector<RhombusParams> enumerate_solutions(const EnumerateOptions& opts = {}) {
  if (opts.seed_count < 1) {
    throw ParameterDomainError("enumerate_solutions: seed_count must be at least 1");
  }
  std::vector<RhombusParams> roots;
  for (std::size_t i = 0; i < opts.seed_count; ++i) {
    const NewtonResult r = newton_solve(detail::seed_point(opts.rng_seed, i, opts.box), opts.newton);
    if (!r.converged()) continue;
    const bool seen = std::any_of(roots.begin(), roots.end(), [&](const RhombusParams& known) {
      return detail::max_norm_distance(known, r.params) < opts.dedupe_tol;
    });
    if (!seen) roots.push_back(r.params);
  }
  std::erase_if(roots, [&](const RhombusParams& x) { return !is_non_degenerate(x, opts.min_separation); });
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Vertex correspondence sending each vertex of rhombus_layout(a), reflected
/// in y = x, to the vertex of rhombus_layout(b) at the same place. Empty if
/// some reflected vertex has no unique partner or the map is not a bijection.
inline std::vector<Vertex> reflection_correspondence(const RhombusParams& a, const RhombusParams& b,
                                                     double tol) {
  const Drawing da = rhombus_layout(a);
  const Drawing db = rhombus_layout(b);
  const std::size_t n = da.size();
  std::vector<Vertex> map(n, n);
  std::vector<bool> hit(n, false);
  for (Vertex v = 0; v < n; ++v) {
    const Point mirrored{da.position(v).y, da.position(v).x};
    for (Vertex w = 0; w < n; ++w) {
      if (distance(mirrored, db.position(w)) > tol) continue;
      if (map[v] != n) return {};  // ambiguous
      map[v] = w;
    }
    if (map[v] == n || hit[map[v]]) return {};
    hit[map[v]] = true;
  }
  return map;
}

/// True iff drawing(b) is drawing(a) reflected in y = x as point multisets
/// within `tol`, and the induced vertex correspondence is a graph
/// automorphism.
inline bool check_reflection_pair(const RhombusParams& a, const RhombusParams& b, double tol = 1e-9) {
  const std::vector<Vertex> map = reflection_correspondence(a, b, tol);
  return !map.empty() && is_automorphism(mobius_kantor(), map);
}

}  // namespace unitdist
