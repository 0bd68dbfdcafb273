#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ellcirc/errors.hpp"
#include "ellcirc/export/json_writer.hpp"
#include "ellcirc/export/report.hpp"
#include "ellcirc/export/svg.hpp"
#include "ellcirc/monte_carlo.hpp"

using namespace ellcirc;
using exporting::Json;

namespace {

enum Exit : int {
  ok = 0,
  input_error = 2,
  assumption_violation = 3,
  statistical_failure = 4,
  consistency_error = 5,
};

struct Args {
  double a = 0.0;
  double b = 0.0;
  double r = 0.0;
  std::optional<double> s;
  std::optional<double> t;
  std::optional<double> sigma;
  std::optional<double> sigma_deg;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string mode = "throws";
  std::string out;
  int indent = 2;
  double l = 0.0;
  double x0 = 0.0;
  double y0 = 0.0;
  int n = 720;
};

int emit(const Json& doc, int indent, int code) {
  std::cout << exporting::dump_json(doc, indent);
  return code;
}

std::optional<Lattice> lattice_of(const Args& args, bool required) {
  if (!args.s || !args.t) {
    if (required) throw DomainError("this command needs both --s and --t");
    if (args.s || args.t) throw DomainError("--s and --t must be given together");
    return std::nullopt;
  }
  double sigma = std::numbers::pi / 2.0;
  if (args.sigma) sigma = *args.sigma;
  if (args.sigma_deg) sigma = *args.sigma_deg * std::numbers::pi / 180.0;
  Lattice lat{*args.s, *args.t, sigma};
  validate_lattice(lat);
  return lat;
}

int run(const std::string& command, const Args& args) {
  if (command == "measures") {
    return emit(exporting::measures_report(Ellipse(args.a, args.b), args.r), args.indent, ok);
  }
  if (command == "probabilities") {
    const Ellipse e(args.a, args.b);
    require_radius(args.r);
    const Lattice lat = *lattice_of(args, true);
    return emit(exporting::probabilities_report(e, args.r, lat), args.indent, ok);
  }
  if (command == "simulate") {
    const Ellipse e(args.a, args.b);
    require_radius(args.r);
    MonteCarloOptions opts;
    opts.threads = args.threads;
    std::optional<Lattice> lat;
    EstimateReport rep;
    std::uint64_t samples = 0;
    if (args.mode == "areas") {
      samples = args.samples.value_or(1'000'000);
      rep = estimate_fixed_direction_areas(e, args.r, samples, args.seed, opts);
    } else {
      lat = lattice_of(args, true);
      samples = args.samples.value_or(10'000'000);
      rep = simulate_throws(e, args.r, *lat, samples, args.seed, opts);
    }
    const Json doc =
        exporting::simulate_report(e, args.r, lat, args.mode, samples, args.seed, rep);
    return emit(doc, args.indent, rep.max_abs_z() > exporting::z_fail ? statistical_failure : ok);
  }
  if (command == "segment") {
    const std::optional<Lattice> lat = lattice_of(args, false);
    return emit(exporting::segment_report({args.l, args.r}, lat), args.indent, ok);
  }
  if (command == "classify") {
    const Ellipse e(args.a, args.b);
    const CenterOffset c{args.x0, args.y0};
    const auto outcome = exporting::classify_both(e, args.r, c);
    const Json doc = exporting::classify_report(e, args.r, c, outcome);
    return emit(doc, args.indent, doc["agreement"] == "disagree" ? consistency_error : ok);
  }
  // curves
  const Ellipse e(args.a, args.b);
  const auto scene = exporting::build_curve_scene(e, args.r, args.n);
  std::ofstream file(args.out, std::ios::binary);
  if (!file) throw DomainError("cannot open output file '" + args.out + "'");
  file << exporting::render_svg(scene);
  file.close();
  if (!file) throw DomainError("failed writing output file '" + args.out + "'");

  Json doc = exporting::report_header("curves");
  doc["input"] = Json{{"a", args.a}, {"b", args.b}, {"r", args.r}, {"n", args.n}};
  doc["case_id"] = to_int(case_classify(e, args.r));
  doc["out"] = args.out;
  doc["polylines"] = scene.polylines.size();
  doc["cusps"] = scene.cusps.size();
  doc["viewport"] = Json{{"min_x", scene.min_x},
                         {"min_y", scene.min_y},
                         {"max_x", scene.max_x},
                         {"max_y", scene.max_y}};
  return emit(doc, args.indent, ok);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ellipse/circle kinematic measures, hitting probabilities and curve plots"};
  app.set_version_flag("--version", exporting::tool_version());
  app.require_subcommand(1);
  Args args;

  const auto ellipse_flags = [&](CLI::App* sub) {
    sub->add_option("--a", args.a, "semi-major axis")->required();
    sub->add_option("--b", args.b, "semi-minor axis")->required();
    sub->add_option("--r", args.r, "circle radius")->required();
  };
  const auto lattice_flags = [&](CLI::App* sub) {
    sub->add_option("--s", args.s, "lattice side s");
    sub->add_option("--t", args.t, "lattice side t");
    auto* rad = sub->add_option("--sigma", args.sigma, "lattice angle in radians (default pi/2)");
    auto* deg = sub->add_option("--sigma-deg", args.sigma_deg, "lattice angle in degrees");
    rad->excludes(deg);
  };
  const auto common = [&](CLI::App* sub) {
    sub->add_option("--json-indent", args.indent, "JSON indent, negative for one line");
  };

  auto* measures = app.add_subcommand("measures", "areas, kinematic measures and residuals");
  ellipse_flags(measures);
  common(measures);

  auto* probs = app.add_subcommand("probabilities", "hitting probabilities on a circle lattice");
  ellipse_flags(probs);
  lattice_flags(probs);
  common(probs);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo check of the closed forms");
  ellipse_flags(simulate);
  lattice_flags(simulate);
  simulate->add_option("--mode", args.mode, "areas or throws")
      ->check(CLI::IsMember({"areas", "throws"}));
  simulate->add_option("--samples", args.samples, "default 1e6 (areas) or 1e7 (throws)");
  simulate->add_option("--seed", args.seed, "RNG seed");
  simulate->add_option("--threads", args.threads, "worker threads, 0 for all cores");
  common(simulate);

  auto* segment = app.add_subcommand("segment", "line segment of length l against circles");
  segment->add_option("--l", args.l, "segment length")->required();
  segment->add_option("--r", args.r, "circle radius")->required();
  lattice_flags(segment);
  common(segment);

  auto* classify_cmd = app.add_subcommand("classify", "classify one circle pose");
  ellipse_flags(classify_cmd);
  classify_cmd->add_option("--x0", args.x0, "circle centre x");
  classify_cmd->add_option("--y0", args.y0, "circle centre y");
  common(classify_cmd);

  auto* curves = app.add_subcommand("curves", "SVG of the ellipse, parallel curves and evolute");
  ellipse_flags(curves);
  curves->add_option("--n", args.n, "samples per curve (>= 64)");
  curves->add_option("--out", args.out, "output SVG path")->required();
  common(curves);

  std::string command = "none";
  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    for (const auto* sub : app.get_subcommands()) command = sub->get_name();
    return emit(exporting::error_report(command, "input_error", e.what(), input_error), 2,
                input_error);
  }
  command = app.get_subcommands().front()->get_name();

  try {
    return run(command, args);
  } catch (const DomainError& e) {
    return emit(exporting::error_report(command, "input_error", e.what(), input_error),
                args.indent, input_error);
  } catch (const AssumptionError& e) {
    return emit(
        exporting::error_report(command, "assumption_violation", e.what(), assumption_violation),
        args.indent, assumption_violation);
  } catch (const std::exception& e) {
    return emit(exporting::error_report(command, "consistency_error", e.what(), consistency_error),
                args.indent, consistency_error);
  }
}
