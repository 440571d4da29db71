#include "unitdist/layout.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "unitdist/solver.hpp"

namespace unitdist {
namespace {

std::vector<Vertex> from_cycles(std::initializer_list<std::vector<Vertex>> cycles) {
  std::vector<Vertex> perm(16);
  for (Vertex v = 0; v < 16; ++v) perm[v] = v;
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) perm[c[i]] = c[(i + 1) % c.size()];
  }
  return perm;
}

const std::vector<Vertex> kMirrorX =  // (x, y) -> (-x, y)
    from_cycles({{1, 7}, {2, 6}, {3, 5}, {9, 15}, {10, 14}, {11, 13}});
const std::vector<Vertex> kMirrorY =  // (x, y) -> (x, -y)
    from_cycles({{0, 4}, {1, 3}, {5, 7}, {8, 12}, {9, 11}, {13, 15}});
const std::vector<Vertex> kHalfTurn =
    from_cycles({{0, 4}, {1, 5}, {2, 6}, {3, 7}, {8, 12}, {9, 13}, {10, 14}, {11, 15}});

RhombusParams solved() {
  const NewtonResult r = newton_solve({1.1, 1.6, 0.9, 0.1});
  EXPECT_TRUE(r.converged());
  return r.params;
}

// Max displacement between the mapped drawing and the relabelled original.
double symmetry_defect(const Drawing& d, const std::vector<Vertex>& perm, double sx, double sy) {
  double worst = 0.0;
  for (Vertex v = 0; v < d.size(); ++v) {
    const Point p = d.position(v);
    worst = std::max(worst, distance({sx * p.x, sy * p.y}, d.position(perm[v])));
  }
  return worst;
}

TEST(RhombusLayout, PublishedCoordinates) {
  const Drawing d = rhombus_layout(solved());
  EXPECT_NEAR(d.position(0).x, 0.0, 1e-15);
  EXPECT_NEAR(d.position(0).y, 1.647647, 1e-5);
  EXPECT_NEAR(d.position(13).x, 0.857420, 1e-5);
  EXPECT_NEAR(d.position(13).y, 0.133029, 1e-5);
  EXPECT_EQ(d.graph(), mobius_kantor());
}

TEST(RhombusLayout, PointSymmetricInnerPair) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 20; ++i) {
    const Drawing d = rhombus_layout({u(gen), u(gen), u(gen), u(gen)});
    EXPECT_EQ(d.position(9), (Point{-d.position(13).x, -d.position(13).y}));
  }
}

TEST(RhombusLayout, DegenerateParamsStillBuild) {
  const Drawing d = rhombus_layout({2, 0, 0, 0});
  EXPECT_EQ(d.position(0), (Point{0, 0}));
  EXPECT_EQ(d.position(4), (Point{0, -0.0}));
}

TEST(RhombusLayout, OuterCycleOnRhombus) {
  const RhombusParams x = solved();
  const Drawing d = rhombus_layout(x);
  for (Vertex v = 0; v < 8; ++v) {
    const Point p = d.position(v);
    EXPECT_NEAR(std::abs(p.x) / x.h + std::abs(p.y) / x.k, 1.0, 1e-12) << v;
  }
}

TEST(RhombusLayout, DihedralSymmetry) {
  const Graph g = mobius_kantor();
  ASSERT_TRUE(is_automorphism(g, kMirrorX));
  ASSERT_TRUE(is_automorphism(g, kMirrorY));
  ASSERT_TRUE(is_automorphism(g, kHalfTurn));
  for (Vertex v = 0; v < 16; ++v) EXPECT_NE(kHalfTurn[v], v);

  const Drawing d = rhombus_layout(solved());
  EXPECT_LT(symmetry_defect(d, kMirrorX, -1, 1), 1e-12);
  EXPECT_LT(symmetry_defect(d, kMirrorY, 1, -1), 1e-12);
  EXPECT_LT(symmetry_defect(d, kHalfTurn, -1, -1), 1e-12);
  // Pairing a reflection with the other reflection's relabelling fails.
  EXPECT_GT(symmetry_defect(d, kMirrorY, -1, 1), 0.1);
}

TEST(CircularLayout, MobiusKantorClosedForm) {
  const CircularGeometry geo = circular_geometry(8, 3);
  EXPECT_NEAR(geo.outer_radius, 1.306563, 1e-6);
  EXPECT_NEAR(geo.inner_radius, 0.541196, 1e-6);
  // R^2 + r^2 = 2 and 2Rr = sqrt 2, so cos(alpha) = 1/sqrt 2.
  EXPECT_NEAR(geo.outer_radius * geo.outer_radius + geo.inner_radius * geo.inner_radius, 2.0, 1e-12);
  EXPECT_NEAR(2 * geo.outer_radius * geo.inner_radius, std::numbers::sqrt2, 1e-12);
  EXPECT_LT(std::abs(std::cos(geo.inner_offset) - std::numbers::sqrt2 / 2), 1e-12);
  EXPECT_NEAR(geo.inner_offset, std::numbers::pi / 4, 1e-12);
}

TEST(CircularLayout, DefaultPutsZeroAndTenAtUnitDistance) {
  const Drawing d = circular_layout(8, 3);
  EXPECT_NEAR(distance(d.position(0), d.position(10)), 1.0, 1e-12);
  EXPECT_FALSE(d.graph().adjacent(0, 10));
  EXPECT_NEAR(d.position(0).x, 0.0, 1e-15);
  EXPECT_GT(d.position(0).y, 0.0);
}

TEST(CircularLayout, PositiveSignMovesTheCoincidence) {
  const Drawing d = circular_layout(8, 3, RotationSign::Positive);
  EXPECT_NEAR(distance(d.position(0), d.position(14)), 1.0, 1e-12);
  EXPECT_GT(std::abs(distance(d.position(0), d.position(10)) - 1.0), 0.5);
}

TEST(CircularLayout, AllEdgesUnitWheneverFeasible) {
  std::size_t feasible = 0;
  for (std::size_t n = 3; n <= 24; ++n) {
    for (std::size_t s = 1; 2 * s < n; ++s) {
      Drawing d;
      try {
        d = circular_layout(n, s);
      } catch (const InfeasibleLayoutError&) {
        continue;
      }
      ++feasible;
      for (const Edge& e : d.graph().edges()) {
        ASSERT_NEAR(distance(d.position(e.u), d.position(e.v)), 1.0, 1e-12) << n << "," << s;
      }
    }
  }
  EXPECT_GT(feasible, 20u);
}

TEST(CircularLayout, CubeIsFeasible) {
  const Drawing d = circular_layout(4, 1);
  EXPECT_EQ(d.size(), 8u);
}

TEST(CircularLayout, InfeasibleWhenRadiiTooFarApart) {
  // R = 1/(2 sin 9deg) ~ 3.196, r = 1/(2 sin 27deg) ~ 1.101.
  EXPECT_THROW(circular_layout(20, 3), InfeasibleLayoutError);
  EXPECT_THROW(circular_layout(8, 4), ParameterDomainError);
}

TEST(Drawing, ValidatesShape) {
  EXPECT_THROW(Drawing(Graph(2, {{0, 1}}), {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Drawing(Graph(1, {}), {{std::numeric_limits<double>::quiet_NaN(), 0}}),
               std::invalid_argument);
}

}  // namespace
}  // namespace unitdist
