#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ellcirc/export/json_writer.hpp"
#include "ellcirc/intersection.hpp"
#include "ellcirc/measures.hpp"
#include "ellcirc/monte_carlo.hpp"

namespace ellcirc::exporting {

inline constexpr const char* schema_version = "1.0.0";

/// Relative tolerances of the residual fields, scaled by max(1, |reference|).
inline constexpr double partition_tol = 1e-9;
inline constexpr double poincare_tol = 1e-9;
inline constexpr double inner_area_tol = 1e-8;
inline constexpr double measure_tol = 1e-9;
inline constexpr double probability_tol = 1e-12;

/// Estimates with |z| above this are a hard statistical failure.
inline constexpr double z_fail = 4.0;

const char* tool_version();

/// Common header: schema and tool versions, command name, status.
Json report_header(const std::string& command, const std::string& status = "ok");

/// Areas, measures and identity residuals. Throws ConsistencyError when a
/// residual exceeds its tolerance.
Json measures_report(const Ellipse& e, double r);

/// measures_report plus the lattice, hitting probabilities and E(Z).
Json probabilities_report(const Ellipse& e, double r, const Lattice& lat);

Json estimate_json(const EstimateReport& rep);

Json simulate_report(const Ellipse& e, double r, const std::optional<Lattice>& lat,
                     const std::string& mode, std::uint64_t samples, std::uint64_t seed,
                     const EstimateReport& rep);

Json segment_report(const SegmentSpec& seg, const std::optional<Lattice>& lat);

struct ClassifyOutcome {
  Relation oracle;
  std::optional<Relation> region;  // empty when the region picture is indeterminate
  double boundary_distance;
};

ClassifyOutcome classify_both(const Ellipse& e, double r, CenterOffset c);

Json classify_report(const Ellipse& e, double r, CenterOffset c, const ClassifyOutcome& out);

Json error_report(const std::string& command, const std::string& kind, const std::string& message,
                  int exit_code);

}  // namespace ellcirc::exporting
