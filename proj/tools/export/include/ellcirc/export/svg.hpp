#pragma once

#include <string>
#include <vector>

#include "ellcirc/ellipse.hpp"

namespace ellcirc::exporting {

struct StyledPolyline {
  std::string style;  // ellipse, outer, inner, inner-loop, evolute
  std::vector<PlanePoint> points;
  bool closed = false;
};

struct CurveScene {
  std::vector<StyledPolyline> polylines;
  std::vector<PlanePoint> cusps;
  // Viewport in model coordinates, margin included.
  double min_x = 0.0;
  double min_y = 0.0;
  double max_x = 0.0;
  double max_y = 0.0;
};

/// Ellipse, both parallel curves at distance r, the evolute and the cusps of
/// the inner curve. In cases 2-4 the inner curve is split into its loops.
/// `n` (>= 64) is the number of samples per full curve.
CurveScene build_curve_scene(const Ellipse& e, double r, int n);

/// Standalone SVG 1.1 document; y points up in the drawing.
std::string render_svg(const CurveScene& scene);

}  // namespace ellcirc::exporting
