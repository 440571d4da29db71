#pragma once

// Command-line orchestration: solve -> layout -> verify -> config -> render.
// Every stage reads and writes JSON artifacts so each one can be rerun from
// files. Exit codes: 0 success, 1 usage or input error, 2 verdict failure.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "unitdist/configuration.hpp"
#include "unitdist/graph.hpp"
#include "unitdist/io.hpp"
#include "unitdist/layout.hpp"
#include "unitdist/render.hpp"
#include "unitdist/solver.hpp"
#include "unitdist/verifier.hpp"

namespace unitdist::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerdict = 2;

struct RunConfig {
  std::string command;
  std::filesystem::path out_dir = "out";

  // solve
  std::size_t seed_count = 10000;
  std::uint64_t rng_seed = 42;
  double solver_tol = 1e-12;

  // layout
  std::string layout_kind = "rhombus";
  std::filesystem::path solutions_path;  // defaults to <out_dir>/solutions.json
  std::size_t solution_index = 0;
  std::size_t gp_n = 8;
  std::size_t gp_s = 3;
  int rotation_sign = -1;

  // verify / config / render
  std::filesystem::path drawing_path;
  std::filesystem::path configuration_path;
  std::filesystem::path output_path;
  double edge_tol = 1e-9;
  double gap_threshold = 1e-2;
  std::string centers_class = "a";

  VerifyOptions verify_options() const { return {edge_tol, gap_threshold, edge_tol}; }
  CentersClass centers() const { return centers_class == "b" ? CentersClass::B : CentersClass::A; }
  RotationSign sign() const { return rotation_sign < 0 ? RotationSign::Negative : RotationSign::Positive; }
  std::filesystem::path output_or(const std::string& default_name) const {
    return output_path.empty() ? out_dir / default_name : output_path;
  }
};

namespace detail {

inline std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

inline std::string pair_text(std::size_t u, std::size_t v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

inline void print_report(std::ostream& out, const std::string& title, const FaithfulnessReport& r) {
  const auto row = [&](const std::string& check, bool ok, const std::string& detail) {
    out << "  " << (ok ? "PASS" : "FAIL") << "  " << check;
    for (std::size_t i = check.size(); i < 24; ++i) out << ' ';
    out << detail << '\n';
  };
  out << title << '\n';
  row("unit edges", r.is_unit_distance,
      "max |len-1| = " + fmt("%.3e", r.max_edge_residual) + " over " +
          std::to_string(r.edges_checked) + " edges, worst " +
          pair_text(r.max_edge_witness.u, r.max_edge_witness.v));
  row("non-edge gap", r.min_nonedge_gap >= r.gap_threshold,
      "min |dist-1| = " + fmt("%.6g", r.min_nonedge_gap) + " over " +
          std::to_string(r.nonedges_checked) + " pairs, at " +
          pair_text(r.min_nonedge_witness.u, r.min_nonedge_witness.v) + ", " +
          std::to_string(r.near_unit_nonedges.size()) + " below threshold");
  row("degeneracies", r.degeneracies.empty(), std::to_string(r.degeneracies.size()) + " found");
  row("faithful", r.is_faithful, r.is_faithful ? "yes" : "no");
}

inline void print_solutions(std::ostream& out, const std::vector<RhombusParams>& sols) {
  out << sols.size() << " non-degenerate solution(s)\n";
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const RhombusParams& x = sols[i];
    out << "  [" << i << "] h=" << fmt("%.9f", x.h) << " k=" << fmt("%.9f", x.k)
        << " p=" << fmt("%.9f", x.p) << " q=" << fmt("%.9f", x.q)
        << " residual=" << fmt("%.2e", residual(x).max_abs()) << '\n';
  }
}

inline std::vector<RhombusParams> solve_all(const RunConfig& cfg) {
  EnumerateOptions opts;
  opts.seed_count = cfg.seed_count;
  opts.rng_seed = cfg.rng_seed;
  opts.newton.tol = cfg.solver_tol;
  return enumerate_solutions(opts);
}

}  // namespace detail

inline int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::vector<RhombusParams> sols = detail::solve_all(cfg);
  write_text(cfg.output_or("solutions.json"), to_text(json(sols)));
  detail::print_solutions(out, sols);
  if (sols.empty()) {
    err << "solve: no solution found from " << cfg.seed_count << " seed(s)\n";
    return kExitVerdict;
  }
  return kExitOk;
}

inline int cmd_layout(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Drawing d;
  if (cfg.layout_kind == "circular") {
    d = circular_layout(cfg.gp_n, cfg.gp_s, cfg.sign());
  } else {
    const auto path = cfg.solutions_path.empty() ? cfg.out_dir / "solutions.json" : cfg.solutions_path;
    const auto sols = read_json(path).get<std::vector<RhombusParams>>();
    if (cfg.solution_index >= sols.size()) {
      err << "layout: solution index " << cfg.solution_index << " out of range (" << sols.size()
          << " available)\n";
      return kExitUsage;
    }
    d = rhombus_layout(sols[cfg.solution_index]);
  }
  const auto path = cfg.output_or("drawing_" + cfg.layout_kind + ".json");
  write_text(path, to_text(json(d)));
  out << "wrote " << cfg.layout_kind << " drawing with " << d.size() << " vertices to " << path.string()
      << '\n';
  return kExitOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Drawing d = read_json(cfg.drawing_path).get<Drawing>();
  const FaithfulnessReport rep = verify(d, cfg.verify_options());
  write_text(cfg.output_or("report.json"), to_text(json(rep)));
  detail::print_report(out, cfg.drawing_path.string(), rep);
  return rep.is_faithful ? kExitOk : kExitVerdict;
}

inline int cmd_config(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const Drawing d = read_json(cfg.drawing_path).get<Drawing>();
  const IncidenceStructure s =
      build_point_circle(d, bipartition(d.graph()), cfg.centers(), cfg.edge_tol, cfg.verify_options());
  const ConfigurationCheck check = validate_configuration(s);
  write_text(cfg.output_or("configuration_" + cfg.centers_class + ".json"), to_text(json(s)));
  out << "configuration (centres in class " << cfg.centers_class << "): " << to_text(json(check));
  return check.valid() ? kExitOk : kExitVerdict;
}

inline int cmd_render(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::string svg;
  std::filesystem::path source;
  if (!cfg.configuration_path.empty()) {
    source = cfg.configuration_path;
    svg = render_configuration(read_json(source).get<IncidenceStructure>());
  } else if (!cfg.drawing_path.empty()) {
    source = cfg.drawing_path;
    svg = render_drawing(read_json(source).get<Drawing>());
  } else {
    err << "render: need --drawing or --configuration\n";
    return kExitUsage;
  }
  const auto path = cfg.output_path.empty() ? cfg.out_dir / source.filename().replace_extension(".svg")
                                            : cfg.output_path;
  write_text(path, svg);
  out << "wrote " << path.string() << '\n';
  return kExitOk;
}

/// Full pipeline into out_dir. Exit 0 iff the rhombus drawing is faithful.
inline int cmd_all(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto& dir = cfg.out_dir;
  const auto fail = [&](const std::string& stage, const std::string& why) {
    err << "all: stage '" << stage << "' failed: " << why << '\n';
    return kExitVerdict;
  };

  const std::vector<RhombusParams> sols = detail::solve_all(cfg);
  write_text(dir / "solutions.json", to_text(json(sols)));
  detail::print_solutions(out, sols);
  if (sols.empty()) return fail("solve", "no non-degenerate solution found");
  if (cfg.solution_index >= sols.size()) return fail("layout", "solution index out of range");

  const Drawing faithful = rhombus_layout(sols[cfg.solution_index]);
  const Drawing circular = circular_layout(cfg.gp_n, cfg.gp_s, cfg.sign());
  write_text(dir / "drawing_rhombus.json", to_text(json(faithful)));
  write_text(dir / "drawing_circular.json", to_text(json(circular)));

  const FaithfulnessReport rep = verify(faithful, cfg.verify_options());
  const FaithfulnessReport circ_rep = verify(circular, cfg.verify_options());
  write_text(dir / "report_rhombus.json", to_text(json(rep)));
  write_text(dir / "report_circular.json", to_text(json(circ_rep)));
  detail::print_report(out, "rhombus drawing", rep);
  detail::print_report(out, "circular drawing", circ_rep);

  write_text(dir / "drawing_rhombus.svg", render_drawing(faithful));
  write_text(dir / "drawing_circular.svg", render_drawing(circular));
  if (!rep.is_faithful) return fail("verify", "rhombus drawing is not faithful");

  const Bipartition bp = bipartition(faithful.graph());
  for (CentersClass c : {CentersClass::A, CentersClass::B}) {
    const IncidenceStructure s = build_point_circle(faithful, bp, c, cfg.edge_tol, cfg.verify_options());
    const ConfigurationCheck check = validate_configuration(s);
    const std::string name = "configuration_" + std::string(to_string(c));
    write_text(dir / (name + ".json"), to_text(json(s)));
    write_text(dir / (name + ".svg"), render_configuration(s));
    if (!check.valid()) return fail("config", name + " violates the configuration axioms");
    const auto& sig = *check.signature;
    out << name << ": (" << sig.points << ", " << sig.circles << ", " << sig.point_degree << ", "
        << sig.circle_degree << ")\n";
  }
  return kExitOk;
}

/// Parses argv and dispatches. All output goes to `out` / `err`.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Faithful unit-distance drawings of the Moebius-Kantor graph"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_out_dir = [&](CLI::App* sub) {
    sub->add_option("--out-dir", cfg.out_dir, "Directory for artifacts")->capture_default_str();
  };
  const auto add_solver = [&](CLI::App* sub) {
    sub->add_option("--seeds", cfg.seed_count, "Number of Newton starts")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--rng-seed", cfg.rng_seed, "Seed for the start points")->capture_default_str();
    sub->add_option("--solver-tol", cfg.solver_tol, "Residual max-norm tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  const auto add_tolerances = [&](CLI::App* sub) {
    sub->add_option("--edge-tol", cfg.edge_tol, "Edge length tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--gap-threshold", cfg.gap_threshold, "Minimum | d - 1 | for non-edges")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  const auto add_rotation = [&](CLI::App* sub) {
    sub->add_option("--rotation-sign", cfg.rotation_sign, "Inner ring turn for circular layout")
        ->check(CLI::IsMember({-1, 1}))
        ->capture_default_str();
  };
  const auto add_centers = [&](CLI::App* sub) {
    sub->add_option("--centers-class", cfg.centers_class, "Colour class used as circle centres")
        ->check(CLI::IsMember({"a", "b"}))
        ->capture_default_str();
  };

  CLI::App* solve = app.add_subcommand("solve", "Enumerate non-degenerate solutions");
  add_out_dir(solve);
  add_solver(solve);
  solve->add_option("-o,--output", cfg.output_path, "Solutions file");

  CLI::App* layout = app.add_subcommand("layout", "Build a drawing");
  add_out_dir(layout);
  layout->add_option("--kind", cfg.layout_kind, "rhombus or circular")
      ->check(CLI::IsMember({"rhombus", "circular"}))
      ->capture_default_str();
  layout->add_option("--solutions", cfg.solutions_path, "Solutions file for the rhombus layout");
  layout->add_option("--index", cfg.solution_index, "Which solution to draw")->capture_default_str();
  layout->add_option("--n", cfg.gp_n, "GP(n,s) outer cycle length")->capture_default_str();
  layout->add_option("--s", cfg.gp_s, "GP(n,s) inner step")->capture_default_str();
  add_rotation(layout);
  layout->add_option("-o,--output", cfg.output_path, "Drawing file");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Certify a drawing");
  add_out_dir(verify_cmd);
  add_tolerances(verify_cmd);
  verify_cmd->add_option("--drawing", cfg.drawing_path, "Drawing JSON")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("-o,--output", cfg.output_path, "Report file");

  CLI::App* config = app.add_subcommand("config", "Point-circle configuration from a drawing");
  add_out_dir(config);
  add_tolerances(config);
  add_centers(config);
  config->add_option("--drawing", cfg.drawing_path, "Drawing JSON")->required()->check(CLI::ExistingFile);
  config->add_option("-o,--output", cfg.output_path, "Configuration file");

  CLI::App* render = app.add_subcommand("render", "SVG for a drawing or configuration");
  add_out_dir(render);
  auto* drawing_opt =
      render->add_option("--drawing", cfg.drawing_path, "Drawing JSON")->check(CLI::ExistingFile);
  render->add_option("--configuration", cfg.configuration_path, "Configuration JSON")
      ->check(CLI::ExistingFile)
      ->excludes(drawing_opt);
  render->add_option("-o,--output", cfg.output_path, "SVG file");

  CLI::App* all = app.add_subcommand("all", "Run the whole pipeline");
  add_out_dir(all);
  add_solver(all);
  add_tolerances(all);
  add_rotation(all);
  all->add_option("--index", cfg.solution_index, "Which solution to draw")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kExitOk;
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }
  if (!(cfg.gap_threshold > cfg.edge_tol)) {
    err << "--gap-threshold must exceed --edge-tol\n" << app.help();
    return kExitUsage;
  }

  for (CLI::App* sub : app.get_subcommands()) cfg.command = sub->get_name();
  try {
    if (cfg.command == "solve") return cmd_solve(cfg, out, err);
    if (cfg.command == "layout") return cmd_layout(cfg, out, err);
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
    if (cfg.command == "config") return cmd_config(cfg, out, err);
    if (cfg.command == "render") return cmd_render(cfg, out, err);
    return cmd_all(cfg, out, err);
  } catch (const NotFaithfulError& e) {
    err << cfg.command << ": " << e.what() << '\n';
    return kExitVerdict;
  } catch (const IncidenceMismatchError& e) {
    err << cfg.command << ": " << e.what() << '\n';
    return kExitVerdict;
  } catch (const std::exception& e) {
    err << cfg.command << ": " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace unitdist::cli
