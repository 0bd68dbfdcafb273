#include "ellcirc/export/report.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ellcirc/elliptic.hpp"
#include "ellcirc/errors.hpp"

namespace ellcirc::exporting {
namespace {

constexpr double pi = std::numbers::pi;

const char* flavor_name(ContainmentFlavor f) {
  switch (f) {
    case ContainmentFlavor::EllipseInCircle: return "ellipse_in_circle";
    case ContainmentFlavor::CircleInEllipse: return "circle_in_ellipse";
    case ContainmentFlavor::None: return "none";
  }
  return "none";
}

// Residual entry {value, tolerance}; the tolerance scales with the reference.
Json residual(const char* name, double value, double tol, double reference) {
  const double scaled = tol * std::max(1.0, std::abs(reference));
  if (!(value <= scaled)) {
    throw ConsistencyError(std::string(name) + " residual " + std::to_string(value) +
                           " exceeds tolerance " + std::to_string(scaled));
  }
  return Json{{"value", value}, {"tolerance", scaled}};
}

Json lattice_json(const Lattice& lat) {
  return Json{{"s", lat.s}, {"t", lat.t}, {"sigma", lat.sigma}, {"cell_area", lat.cell_area()}};
}

Json ellipse_input(const Ellipse& e, double r) {
  return Json{{"a", e.a()}, {"b", e.b()}, {"r", r}};
}

}  // namespace

const char* tool_version() { return ELLCIRC_VERSION; }

Json report_header(const std::string& command, const std::string& status) {
  return Json{{"schema_version", schema_version},
              {"tool", "ellcirc"},
              {"version", tool_version()},
              {"command", command},
              {"status", status}};
}

Json measures_report(const Ellipse& e, double r) {
  const AreaSet ar = areas(e, r);
  const MeasureSet ms = measures(e, r);
  const double ee = complete_e(e.eccentricity());
  const double poincare = 16.0 * r * e.a() * ee;

  Json doc = report_header("measures");
  doc["input"] = ellipse_input(e, r);
  doc["case_id"] = to_int(ar.case_id);
  doc["eccentricity"] = e.eccentricity();
  doc["complete_e"] = ee;
  doc["areas"] = Json{{"a_i01", ar.a_i01}, {"a_i10", ar.a_i10}, {"a_2", ar.a_2},
                      {"a_4", ar.a_4},     {"a_plus", ar.a_plus}, {"a_star", ar.a_star}};
  doc["measures"] = Json{{"m_i", ms.m_i},
                         {"m_2", ms.m_2},
                         {"m_4", ms.m_4},
                         {"containment", flavor_name(ms.flavor)}};

  const double quad = signed_inner_area_quadrature(e, r);
  Json res;
  res["partition"] = residual(
      "partition", std::abs(ar.a_i01 + ar.a_i10 + ar.a_2 + ar.a_4 - ar.a_plus), partition_tol,
      ar.a_plus);
  res["poincare"] =
      residual("poincare", std::abs(2.0 * ar.a_2 + 4.0 * ar.a_4 - poincare), poincare_tol, poincare);
  res["inner_area_quadrature"] =
      residual("inner_area_quadrature", std::abs(quad - ar.a_star), inner_area_tol, ar.a_star);
  res["kinematic_lift"] = residual(
      "kinematic_lift",
      std::max({std::abs(ms.m_2 - 2.0 * pi * ar.a_2), std::abs(ms.m_4 - 2.0 * pi * ar.a_4),
                std::abs(ms.m_i - 2.0 * pi * (ar.a_i01 + ar.a_i10))}),
      measure_tol, 2.0 * pi * ar.a_plus);
  doc["residuals"] = std::move(res);
  return doc;
}

Json probabilities_report(const Ellipse& e, double r, const Lattice& lat) {
  const ProbabilitySet p = probabilities(e, r, lat);
  const double ez = expected_intersections(e, r, lat);
  Json doc = measures_report(e, r);
  doc["command"] = "probabilities";
  doc["input"]["lattice"] = lattice_json(lat);
  doc["probabilities"] =
      Json{{"p_0", p.p_0}, {"p_2", p.p_2}, {"p_4", p.p_4}, {"p_i", p.p_i}, {"p_e", p.p_e}};
  doc["expected_intersections"] = ez;
  doc["residuals"]["zero_split"] =
      residual("zero_split", std::abs(p.p_0 - p.p_i - p.p_e), probability_tol, 1.0);
  doc["residuals"]["mean_count"] =
      residual("mean_count", std::abs(2.0 * p.p_2 + 4.0 * p.p_4 - ez), probability_tol, ez);
  return doc;
}

Json estimate_json(const EstimateReport& rep) {
  const auto one = [](const ClassEstimate& c) {
    return Json{{"name", c.name},         {"count", c.count},         {"estimate", c.estimate},
                {"std_error", c.std_error}, {"reference", c.reference}, {"z_score", c.z_score}};
  };
  Json classes = Json::array();
  for (const ClassEstimate& c : rep.classes) classes.push_back(one(c));
  Json doc{{"n", rep.n}, {"n_degenerate", rep.n_degenerate}, {"classes", std::move(classes)}};
  if (rep.mean_intersections) doc["mean_intersections"] = one(*rep.mean_intersections);
  doc["max_abs_z"] = rep.max_abs_z();
  return doc;
}

Json simulate_report(const Ellipse& e, double r, const std::optional<Lattice>& lat,
                     const std::string& mode, std::uint64_t samples, std::uint64_t seed,
                     const EstimateReport& rep) {
  const bool failed = rep.max_abs_z() > z_fail;
  Json doc = report_header("simulate", failed ? "statistical_failure" : "ok");
  doc["input"] = ellipse_input(e, r);
  if (lat) doc["input"]["lattice"] = lattice_json(*lat);
  doc["mode"] = mode;
  doc["samples"] = samples;
  doc["seed"] = seed;
  doc["case_id"] = to_int(case_classify(e, r));
  doc["estimates"] = estimate_json(rep);
  doc["z_fail"] = z_fail;
  return doc;
}

Json segment_report(const SegmentSpec& seg, const std::optional<Lattice>& lat) {
  const SegmentMeasures m = segment_measures(seg);
  Json doc = report_header("segment");
  doc["input"] = Json{{"l", seg.l}, {"r", seg.r}};
  doc["measures"] = Json{{"m_i", m.m_i}, {"m_1", m.m_1}, {"m_2", m.m_2}};
  if (lat) {
    const SegmentProbabilitySet p = segment_probabilities(seg, *lat);
    doc["input"]["lattice"] = lattice_json(*lat);
    doc["probabilities"] = Json{{"p_0", p.p_0}, {"p_1", p.p_1}, {"p_2", p.p_2},
                                {"p_i", p.p_i}, {"p_e", p.p_e}};
    Json res;
    res["partition"] =
        residual("partition", std::abs(p.p_0 + p.p_1 + p.p_2 - 1.0), probability_tol, 1.0);
    res["zero_split"] =
        residual("zero_split", std::abs(p.p_0 - p.p_i - p.p_e), probability_tol, 1.0);
    doc["residuals"] = std::move(res);
  }
  return doc;
}

ClassifyOutcome classify_both(const Ellipse& e, double r, CenterOffset c) {
  const RegionChecker checker(e, r);
  ClassifyOutcome out{classify(e, r, c), std::nullopt, checker.boundary_distance(c)};
  try {
    out.region = checker.check(c);
  } catch (const IndeterminateError&) {
  }
  return out;
}

Json classify_report(const Ellipse& e, double r, CenterOffset c, const ClassifyOutcome& out) {
  std::string agreement;
  if (out.oracle == Relation::Degenerate) {
    agreement = "degenerate";
  } else if (!out.region) {
    agreement = "indeterminate";
  } else {
    agreement = *out.region == out.oracle ? "agree" : "disagree";
  }
  const std::string status = agreement == "disagree"     ? "disagreement"
                             : agreement == "degenerate" ? "degenerate"
                                                         : "ok";
  Json doc = report_header("classify", status);
  doc["input"] = ellipse_input(e, r);
  doc["input"]["x0"] = c.x0;
  doc["input"]["y0"] = c.y0;
  doc["case_id"] = to_int(case_classify(e, r));
  doc["relation"] = std::string(to_string(out.oracle));
  doc["oracle"] = std::string(to_string(out.oracle));
  doc["region_check"] = out.region ? Json(std::string(to_string(*out.region))) : Json(nullptr);
  doc["boundary_distance"] = out.boundary_distance;
  doc["agreement"] = agreement;
  return doc;
}

Json error_report(const std::string& command, const std::string& kind, const std::string& message,
                  int exit_code) {
  Json doc = report_header(command, "error");
  doc["error"] = Json{{"kind", kind}, {"message", message}, {"exit_code", exit_code}};
  return doc;
}

}  // namespace ellcirc::exporting
