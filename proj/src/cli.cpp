#include "suppcurve/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "suppcurve/curve_geometry.hpp"
#include "suppcurve/curve_io.hpp"
#include "suppcurve/functionals.hpp"
#include "suppcurve/inequality_suite.hpp"
#include "suppcurve/report_json.hpp"
#include "suppcurve/svg_render.hpp"

namespace suppcurve {

namespace {

constexpr double kConvexTol = 1e-9;
constexpr double kDegenerateTol = -1e-9;

// Signals a failure that has already been reported on the error stream.
struct CliExit {
  int code;
};

FourierSupport load_curve(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fmt::print(err, "error: cannot read '{}'\n", path);
    throw CliExit{exit_code::kInvalidArguments};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_curve(buf.str());
  } catch (const ParseError& e) {
    fmt::print(err, "{}: {}\n", path, e.what());
    throw CliExit{exit_code::kParseError};
  } catch (const std::invalid_argument& e) {
    fmt::print(err, "{}: {}\n", path, e.what());
    throw CliExit{exit_code::kParseError};
  }
}

int cmd_check(const std::string& path, bool allow_degenerate, std::ostream& out, std::ostream& err) {
  const FourierSupport p = load_curve(path, err);
  const CurvatureMinimum m = min_curvature_radius(p);
  const PlanePoint s = steiner_point(p);
  fmt::print(out, "degree: {}\n", p.degree());
  fmt::print(out, "min p+p'': {:.17g}\n", m.value);
  fmt::print(out, "argmin phi: {:.17g}\n", m.argmin_phi);
  fmt::print(out, "steiner point: {:.17g} {:.17g}\n", s.x, s.y);
  fmt::print(out, "constant width: {}\n", is_constant_width(p, 1e-9));
  const double tol = allow_degenerate ? kDegenerateTol : kConvexTol;
  const bool convex = m.value > tol;
  fmt::print(out, "convex: {}\n", convex);
  if (!convex) {
    fmt::print(err, "{}: not convex, min(p + p'') = {:.17g} at phi = {:.17g}\n", path, m.value, m.argmin_phi);
    return exit_code::kNotConvex;
  }
  return exit_code::kOk;
}

int cmd_report(const std::string& path, bool json, bool allow_degenerate, std::ostream& out,
               std::ostream& err) {
  const FourierSupport p = load_curve(path, err);
  try {
    const DeficitReport r = analyze(p, 1e-9, allow_degenerate ? kDegenerateTol : kConvexTol);
    out << (json ? report_json(r) : report_text(r));
  } catch (const ConvexityError& e) {
    fmt::print(err, "{}: {}\n", path, e.what());
    return exit_code::kNotConvex;
  }
  return exit_code::kOk;
}

int cmd_render(const std::string& path, const std::string& out_path, const std::vector<std::string>& layers,
               const std::string& parallel, int samples, std::ostream& out, std::ostream& err) {
  const FourierSupport p = load_curve(path, err);
  RenderSpec spec;
  spec.samples_per_curve = samples;
  if (!layers.empty()) {
    spec.layers.clear();
    for (const std::string& name : layers) spec.layers.push_back(layer_from_string(name));
  }
  if (parallel != "L/2pi") {
    double r = 0.0;
    std::size_t used = 0;
    try {
      r = std::stod(parallel, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != parallel.size() || !std::isfinite(r)) {
      fmt::print(err, "error: --parallel expects L/2pi or a number, got '{}'\n", parallel);
      return exit_code::kInvalidArguments;
    }
    spec.parallel_distance = r;
  }
  const std::string svg = render_svg(p, spec);
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    fmt::print(err, "error: cannot write '{}'\n", out_path);
    return exit_code::kInvalidArguments;
  }
  file << svg;
  fmt::print(out, "wrote {} ({} layers)\n", out_path, spec.layers.size());
  return exit_code::kOk;
}

int cmd_sweep(const SweepOptions& options, std::ostream& out) {
  const SweepSummary s = sweep(options);
  fmt::print(out, "sweep: count={} degree={} seed={} constant_width={} violations={}\n", s.count, options.degree,
             options.seed, options.constant_width_only, s.violations.size());
  for (const auto& [name, value] : s.min_slack_per_bound) fmt::print(out, "min slack {}: {:.17g}\n", name, value);
  if (s.tightest_witness) {
    fmt::print(out, "tightest witness: seed={} relative_slack={:.17g}\n", s.tightest_witness->seed,
               s.tightest_witness->relative_slack);
  }
  for (const Violation& v : s.violations) {
    fmt::print(out, "violation: seed={} bound={} slack={:.17g}\n", v.seed, v.bound, v.slack);
  }
  return s.violations.empty() ? exit_code::kOk : exit_code::kViolation;
}

int cmd_canon(const std::string& path, std::ostream& out, std::ostream& err) {
  const FourierSupport p = load_curve(path, err);
  CanonicalPhase c;
  try {
    c = canonical_phase(p);
  } catch (const std::invalid_argument& e) {
    fmt::print(err, "{}: {}\n", path, e.what());
    return exit_code::kInvalidArguments;
  }
  fmt::print(out, "n: {}\na0: {:.17g}\namplitude: {:.17g}\nphi0: {:.17g}\n", c.n, c.a0, c.amplitude, c.phi0);
  if (c.n == 2) {
    fmt::print(out, "normal form: a0 + amplitude sin(2u), u = phi - phi0 + pi/4\n");
  } else {
    fmt::print(out, "normal form: a0 + amplitude cos(3u), u = phi - phi0\n");
  }
  return exit_code::kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convex curves from Fourier support functions"};
  app.name("suppcurve");
  app.require_subcommand(1);

  std::string file;
  bool allow_degenerate = false;

  auto* check = app.add_subcommand("check", "Convexity and invariant lint; prints min p+p''");
  check->add_option("file", file, "Curve file")->required();
  check->add_flag("--allow-degenerate", allow_degenerate, "Accept min(p+p'') = 0");

  bool json = false;
  auto* report = app.add_subcommand("report", "Functionals, bounds, slacks and equality class");
  report->add_option("file", file, "Curve file")->required();
  report->add_flag("--json", json, "Emit JSON");
  report->add_flag("--allow-degenerate", allow_degenerate, "Accept min(p+p'') = 0");

  std::string out_path;
  std::vector<std::string> layers;
  std::string parallel = "L/2pi";
  int samples = 1024;
  auto* render = app.add_subcommand("render", "Render boundary, pedal, evolute and parallel curves to SVG");
  render->add_option("file", file, "Curve file")->required();
  render->add_option("--out", out_path, "Output SVG path")->required();
  render->add_option("--layers", layers, "boundary, pedal, evolute, parallel")->delimiter(',');
  render->add_option("--parallel", parallel, "Parallel distance: L/2pi or a number");
  render->add_option("--samples", samples, "Samples per curve")->check(CLI::Range(16, 1 << 22));

  SweepOptions sweep_options;
  auto* sweep_cmd = app.add_subcommand("sweep", "Randomized verification of every inequality");
  sweep_cmd->add_option("--count", sweep_options.count, "Number of curves")->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--degree", sweep_options.degree, "Degree of the random curves")
      ->required()
      ->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--seed", sweep_options.seed, "Base seed")->required();
  sweep_cmd->add_flag("--constant-width", sweep_options.constant_width_only, "Odd harmonics only");
  sweep_cmd->add_option("--min-radius", sweep_options.min_radius, "Minimum radius of curvature")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--tol", sweep_options.tol, "Relative violation tolerance")->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--threads", sweep_options.threads, "Worker threads (0 = all cores)");

  auto* canon = app.add_subcommand("canon", "Canonical phase of an n = 2 or n = 3 curve");
  canon->add_option("file", file, "Curve file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kInvalidArguments;
  }

  try {
    if (check->parsed()) return cmd_check(file, allow_degenerate, out, err);
    if (report->parsed()) return cmd_report(file, json, allow_degenerate, out, err);
    if (render->parsed()) return cmd_render(file, out_path, layers, parallel, samples, out, err);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_options, out);
    if (canon->parsed()) return cmd_canon(file, out, err);
  } catch (const CliExit& e) {
    return e.code;
  } catch (const std::invalid_argument& e) {
    fmt::print(err, "error: {}\n", e.what());
    return exit_code::kInvalidArguments;
  }
  return exit_code::kInvalidArguments;
}

}  // namespace suppcurve
