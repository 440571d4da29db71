// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "unitdist/cli.hpp"
#include "unitdist/unitdist.hpp"

namespace {

using namespace unitdist;
namespace fs = std::filesystem;

constexpr RhombusParams kPublished{1.133693, 1.647647, 0.857420, 0.133029};
constexpr double kFaithfulMinGap = 0.06924361979755078;  // exhaustive oracle, frozen

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

EnumerateOptions fixed_seed_options() {
  EnumerateOptions opts;
  opts.seed_count = 10000;
  opts.rng_seed = 42;
  return opts;
}

std::vector<RhombusParams>& solutions() {
  static std::vector<RhombusParams> sols = enumerate_solutions(fixed_seed_options());
  return sols;
}

RhombusParams published_solution() {
  for (const RhombusParams& s : solutions()) {
    if (std::abs(s.h - kPublished.h) < 1e-5) return s;
  }
  return newton_solve({1.1, 1.6, 0.9, 0.1}).params;
}

Outcome solution_reproduction() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto sols = enumerate_solutions(fixed_seed_options());
  const double elapsed = seconds_since(start);
  bool found = false;
  for (const RhombusParams& s : sols) {
    found |= std::abs(s.h - kPublished.h) <= 1e-5 && std::abs(s.k - kPublished.k) <= 1e-5 &&
             std::abs(s.p - kPublished.p) <= 1e-5 && std::abs(s.q - kPublished.q) <= 1e-5;
  }
  o.require(found, "published solution not found within 1e-5");
  o.require(elapsed < 5.0, "runtime " + num(elapsed) + " s >= 5 s");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("runtime ") + num(elapsed) + " s";
  return o;
}

Outcome solution_count() {
  Outcome o;
  const auto& sols = solutions();
  o.require(sols.size() == 2, "found " + std::to_string(sols.size()) + " non-degenerate solutions");
  if (sols.size() == 2) o.require(check_reflection_pair(sols[0], sols[1]), "not mirror images in y = x");
  return o;
}

Outcome residual_certificate() {
  Outcome o;
  const ResidualVector r = residual(published_solution());
  o.require(r.max_abs() < 1e-10, "max residual " + num(r.max_abs()));
  o.require(r.f1 < 1e-10, "h^2 + k^2 - 4 = " + num(r.f1));
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("max residual ") + num(r.max_abs());
  return o;
}

Outcome faithfulness_certificate() {
  Outcome o;
  const Drawing d = rhombus_layout(published_solution());
  const Graph& g = d.graph();
  double worst_edge = 0.0;
  double min_gap = 1e300;
  int edges = 0;
  int nonedges = 0;
  for (Vertex u = 0; u < 16; ++u) {
    for (Vertex v = u + 1; v < 16; ++v) {
      const double gap = std::abs(distance(d.position(u), d.position(v)) - 1.0);
      if (g.adjacent(u, v)) {
        ++edges;
        worst_edge = std::max(worst_edge, gap);
      } else {
        ++nonedges;
        min_gap = std::min(min_gap, gap);
      }
    }
  }
  o.require(edges == 24 && nonedges == 96, "pair split " + std::to_string(edges) + "+" + std::to_string(nonedges));
  o.require(worst_edge < 1e-9, "edge residual " + num(worst_edge));
  o.require(min_gap > 0.01, "min non-edge gap " + num(min_gap));
  o.require(std::abs(min_gap - kFaithfulMinGap) < 1e-12, "min gap drifted from frozen constant");
  const FaithfulnessReport rep = verify(d);
  o.require(rep.is_faithful, "verify() does not report faithful");
  o.require(rep.min_nonedge_gap == min_gap, "verify() gap disagrees with exhaustive scan");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("edge residual ") + num(worst_edge) +
              ", min gap " + num(min_gap);
  return o;
}

Outcome non_faithful_baseline() {
  Outcome o;
  const Drawing d = circular_layout(8, 3);
  const FaithfulnessReport rep = verify(d);
  o.require(rep.max_edge_residual < 1e-12, "edge residual " + num(rep.max_edge_residual));
  o.require(rep.is_unit_distance && !rep.is_faithful, "wrong verdict");
  bool witness = false;
  for (const PairGap& p : rep.near_unit_nonedges) witness |= p.u == 0 && p.v == 10 && p.gap < 1e-12;
  o.require(witness, "pair (0,10) not at unit distance");
  const CircularGeometry geo = circular_geometry(8, 3);
  o.require(std::abs(geo.inner_offset - std::numbers::pi / 4) < 1e-12, "alpha != pi/4");
  o.require(std::abs(geo.outer_radius * geo.outer_radius + geo.inner_radius * geo.inner_radius - 2.0) < 1e-12,
            "R^2 + r^2 != 2");
  o.require(std::abs(2 * geo.outer_radius * geo.inner_radius - std::numbers::sqrt2) < 1e-12, "2Rr != sqrt 2");
  return o;
}

Outcome automorphism_order() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t mk = automorphism_count(mobius_kantor());
  const double elapsed = seconds_since(start);
  o.require(mk == 96, "|Aut GP(8,3)| = " + std::to_string(mk));
  o.require(elapsed < 1.0, "runtime " + num(elapsed) + " s");
  const std::uint64_t petersen = automorphism_count(generalized_petersen(5, 2));
  o.require(petersen == 120, "|Aut GP(5,2)| = " + std::to_string(petersen));
  return o;
}

Outcome configuration_validity() {
  Outcome o;
  const Drawing d = rhombus_layout(published_solution());
  const Bipartition bp = bipartition(d.graph());
  const IncidenceStructure a = build_point_circle(d, bp, CentersClass::A);
  const IncidenceStructure b = build_point_circle(d, bp, CentersClass::B);
  for (const IncidenceStructure* s : {&a, &b}) {
    const ConfigurationCheck c = validate_configuration(*s);
    o.require(c.valid() && *c.signature == ConfigurationSignature{8, 8, 3, 3}, "signature is not (8,8,3,3)");
    for (std::size_t i = 0; i < s->points.size(); ++i) {
      for (std::size_t j = 0; j < s->circles.size(); ++j) {
        if (s->incidence(i, j) != d.graph().adjacent(s->point_labels[i], s->circle_labels[j])) {
          o.require(false, "incidence differs from adjacency");
        }
      }
    }
  }
  o.require(b.incidence == a.incidence.transposed(), "incidence matrices are not transposes");
  o.require(b == dual(a), "class-B structure is not the dual of class-A");
  return o;
}

Outcome symmetry_suite() {
  Outcome o;
  const Drawing d = rhombus_layout(published_solution());
  struct Symmetry {
    const char* name;
    double sx, sy;
    std::vector<Vertex> perm;
  };
  const std::vector<Symmetry> symmetries{
      {"mirror x", -1, 1, {0, 7, 6, 5, 4, 3, 2, 1, 8, 15, 14, 13, 12, 11, 10, 9}},
      {"mirror y", 1, -1, {4, 3, 2, 1, 0, 7, 6, 5, 12, 11, 10, 9, 8, 15, 14, 13}},
      {"half-turn", -1, -1, {4, 5, 6, 7, 0, 1, 2, 3, 12, 13, 14, 15, 8, 9, 10, 11}},
  };
  for (const Symmetry& s : symmetries) {
    o.require(is_automorphism(d.graph(), s.perm), std::string(s.name) + " relabelling is not an automorphism");
    double defect = 0.0;
    for (Vertex v = 0; v < 16; ++v) {
      const Point p = d.position(v);
      defect = std::max(defect, distance({s.sx * p.x, s.sy * p.y}, d.position(s.perm[v])));
    }
    o.require(defect < 1e-9, std::string(s.name) + " defect " + num(defect));
  }
  bool fixed_point_free = true;
  for (Vertex v = 0; v < 16; ++v) fixed_point_free &= symmetries[2].perm[v] != v;
  o.require(fixed_point_free, "half-turn has a fixed vertex");
  return o;
}

Outcome numerical_hygiene() {
  Outcome o;
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> box(-3.0, 3.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const RhombusParams x{box(gen), box(gen), box(gen), box(gen)};
    const Eigen::Matrix4d analytic = jacobian(x);
    for (int col = 0; col < 4; ++col) {
      Eigen::Vector4d plus = to_vector(x);
      Eigen::Vector4d minus = to_vector(x);
      plus[col] += 1e-6;
      minus[col] -= 1e-6;
      const Eigen::Vector4d fd =
          (residual(to_params(plus)).as_vector() - residual(to_params(minus)).as_vector()) / 2e-6;
      worst = std::max(worst, (fd - analytic.col(col)).cwiseAbs().maxCoeff());
    }
  }
  o.require(worst < 1e-5, "Jacobian vs finite differences " + num(worst));

  const Drawing base = rhombus_layout(published_solution());
  const FaithfulnessReport ref = verify(base);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> shift(-100.0, 100.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double t = angle(gen);
    const Point off{shift(gen), shift(gen)};
    std::vector<Point> pos;
    for (const Point& p : base.positions()) {
      pos.push_back({std::cos(t) * p.x - std::sin(t) * p.y + off.x, std::sin(t) * p.x + std::cos(t) * p.y + off.y});
    }
    const FaithfulnessReport r = verify(Drawing(base.graph(), pos));
    const bool same = r.is_faithful == ref.is_faithful && r.is_unit_distance == ref.is_unit_distance &&
                      r.degeneracies.size() == ref.degeneracies.size() &&
                      std::abs(r.max_edge_residual - ref.max_edge_residual) < 1e-9 &&
                      std::abs(r.min_nonedge_gap - ref.min_nonedge_gap) < 1e-9 &&
                      std::abs(r.min_vertex_separation - ref.min_vertex_separation) < 1e-9;
    if (!same) {
      o.require(false, "verify changed under rigid motion " + std::to_string(trial));
      break;
    }
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("max FD error ") + num(worst);
  return o;
}

Outcome determinism() {
  Outcome o;
  const fs::path root = fs::temp_directory_path() / "unitdist_acceptance";
  fs::remove_all(root);
  std::ostringstream sink;
  for (const char* name : {"run1", "run2"}) {
    const std::string dir = (root / name).string();
    const char* argv[] = {"unitdist", "all", "--seeds", "10000", "--rng-seed", "42", "--out-dir", dir.c_str()};
    const int code = cli::run_cli(8, argv, sink, sink);
    o.require(code == 0, std::string(name) + " exited " + std::to_string(code));
  }
  const auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  int files = 0;
  for (const auto& entry : fs::directory_iterator(root / "run1")) {
    ++files;
    if (slurp(entry.path()) != slurp(root / "run2" / entry.path().filename())) {
      o.require(false, entry.path().filename().string() + " differs");
    }
  }
  o.require(files == 11, "expected 11 artifacts, got " + std::to_string(files));
  fs::remove_all(root);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1 solution reproduction", solution_reproduction},
      {"2 solution count", solution_count},
      {"3 residual certificate", residual_certificate},
      {"4 faithfulness certificate", faithfulness_certificate},
      {"5 non-faithful baseline", non_faithful_baseline},
      {"6 automorphism count", automorphism_order},
      {"7 configuration validity", configuration_validity},
      {"8 symmetry suite", symmetry_suite},
      {"9 numerical hygiene", numerical_hygiene},
      {"10 determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("[%s] %-28s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
